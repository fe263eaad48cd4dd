#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "idealcalc/errors.hpp"

namespace idealcalc {

// Rings are capped at 16 user variables; one extra slot holds the auxiliary
// variable used by the elimination-based intersection trick.
constexpr int kMaxUserVars = 16;
constexpr int kMaxVars = kMaxUserVars + 1;

// Dense exponent vector. Slots past the ring's variable count stay zero, so
// comparisons can always scan the full fixed-size array.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::initializer_list<int> exps) {
    int i = 0;
    for (int e : exps) set(i++, e);
  }

  int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }

  void set(int i, int v) {
    if (v < 0) throw InternalError("negative exponent");
    degree_ += v - e_[static_cast<std::size_t>(i)];
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
  }

  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e_[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>(e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)]);
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // Requires *this | o.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e_[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>(o.e_[static_cast<std::size_t>(i)] - e_[static_cast<std::size_t>(i)]);
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      auto m = a.e_[static_cast<std::size_t>(i)] > b.e_[static_cast<std::size_t>(i)]
                   ? a.e_[static_cast<std::size_t>(i)]
                   : b.e_[static_cast<std::size_t>(i)];
      r.e_[static_cast<std::size_t>(i)] = m;
      deg += m;
    }
    r.degree_ = deg;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e_[static_cast<std::size_t>(i)] != 0 && b.e_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  static Monomial variable(int i) {
    Monomial r;
    r.set(i, 1);
    return r;
  }

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::int32_t degree_ = 0;
};

}  // namespace idealcalc
