#pragma once

#include <cstdint>
#include <string>

#include "idealcalc/errors.hpp"

namespace idealcalc {

// Field element. For prime fields `num` lies in [0, p) and `den` is 1.
// For the rationals the pair is a normalized fraction (gcd 1, den > 0).
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

// Exact coefficient field: F_p for a prime p, or Q with 64-bit checked
// numerators/denominators. Every operation is exact; rational overflow
// raises OverflowError instead of wrapping.
class Field {
 public:
  enum class Kind { prime, rationals };

  static Field prime_field(std::int64_t p);
  static Field rationals();

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return p_; }

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  // Prints prime-field values balanced around zero, e.g. -1 instead of p-1.
  std::string to_string(const Scalar& a) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  static bool is_prime(std::int64_t p);

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::prime;
  std::int64_t p_ = 32003;
};

constexpr std::int64_t kDefaultPrime = 32003;

}  // namespace idealcalc
