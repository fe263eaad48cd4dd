#pragma once

#include <cstdint>
#include <random>

#include "idealcalc/polynomial.hpp"

namespace idealcalc {

// Deterministic seeded RNG. Sampling avoids std::uniform_int_distribution so
// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw InternalError("next_below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform over the field: F_p directly, small integers for Q.
  Scalar scalar(const Field& F) {
    if (F.kind() == Field::Kind::prime) return F.from_int(static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(F.modulus()))));
    return F.from_int(static_cast<std::int64_t>(next_below(21)) - 10);
  }

  Scalar nonzero_scalar(const Field& F) {
    Scalar s;
    do {
      s = scalar(F);
    } while (F.is_zero(s));
    return s;
  }

  Monomial monomial(int num_vars, int degree) {
    Monomial m;
    for (int d = 0; d < degree; ++d) {
      int i = static_cast<int>(next_below(static_cast<std::uint64_t>(num_vars)));
      m.set(i, m.exponent(i) + 1);
    }
    return m;
  }

  // Random homogeneous polynomial of the given degree (possibly sparse).
  Polynomial homogeneous(const Ring& r, int degree, int terms) {
    std::vector<Term> acc;
    for (int t = 0; t < terms; ++t) acc.push_back({monomial(r->num_vars(), degree), scalar(r->field())});
    return Polynomial(r, std::move(acc));
  }

  Polynomial linear_form(const Ring& r) {
    std::vector<Term> acc;
    for (int i = 0; i < r->num_vars(); ++i) acc.push_back({Monomial::variable(i), scalar(r->field())});
    return Polynomial(r, std::move(acc));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace idealcalc
