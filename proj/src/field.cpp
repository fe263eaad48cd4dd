#include "idealcalc/field.hpp"

#include <numeric>

namespace idealcalc {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked_i64(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError(std::string("rational coefficient overflow in ") + what +
                        "; rerun over a prime field");
  return static_cast<i64>(v);
}

// Normalized fraction from 128-bit intermediates.
Scalar make_rational(i128 num, i128 den, const char* what) {
  if (den == 0) throw InternalError("zero denominator");
  if (num == 0) return {0, 1};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  return {checked_i64(num, what), checked_i64(den, what)};
}

i64 mod_pos(i64 v, i64 p) {
  i64 r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

bool Field::is_prime(i64 p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (i64 d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime_field(i64 p) {
  if (p < 2 || p > (i64(1) << 31))
    throw PreconditionError("prime modulus out of range: " + std::to_string(p));
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

Scalar Field::from_int(i64 v) const {
  if (kind_ == Kind::prime) return {mod_pos(v, p_), 1};
  return {v, 1};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    i64 s = a.num + b.num;
    if (s >= p_) s -= p_;
    return {s, 1};
  }
  return make_rational(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den, "add");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    i64 s = a.num - b.num;
    if (s < 0) s += p_;
    return {s, 1};
  }
  return make_rational(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den, "sub");
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) return {static_cast<i64>(i128(a.num) * b.num % p_), 1};
  return make_rational(i128(a.num) * b.num, i128(a.den) * b.den, "mul");
}

Scalar Field::neg(const Scalar& a) const {
  if (a.num == 0) return a;
  if (kind_ == Kind::prime) return {p_ - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw InternalError("division by zero");
  if (kind_ == Kind::rationals) {
    Scalar r{a.den, a.num};
    if (r.den < 0) {
      r.num = -r.num;
      r.den = -r.den;
    }
    return r;
  }
  // extended Euclid
  i64 t = 0, new_t = 1, r = p_, new_r = a.num;
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return {mod_pos(t, p_), 1};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::prime) {
    i64 v = a.num;
    if (v > p_ / 2) v -= p_;
    return std::to_string(v);
  }
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace idealcalc
