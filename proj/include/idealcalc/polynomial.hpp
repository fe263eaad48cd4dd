#pragma once

#include <vector>

#include "idealcalc/order.hpp"
#include "idealcalc/ring.hpp"

namespace idealcalc {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Exact multivariate polynomial in canonical form: terms strictly decreasing
// under grevlex, no zero coefficients. Immutable in spirit; all operations
// return new values.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);  // normalizes

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  // c * m * (*this)
  Polynomial times_term(const Scalar& c, const Monomial& m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  static Polynomial zero(const Ring& r) { return Polynomial(r); }
  static Polynomial constant(const Ring& r, const Scalar& c);
  static Polynomial variable(const Ring& r, int i);
  static Polynomial monomial(const Ring& r, const Monomial& m, const Scalar& c);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

// Re-index the variables of `f` into `target`: variable i of f.ring()
// becomes variable i + offset of target. Exponents outside the mapped block
// must be zero when offset < 0 semantics are used via project().
Polynomial embed(const Polynomial& f, const Ring& target, int offset);

// Inverse of embed for polynomials not involving the first `offset` variables.
Polynomial project(const Polynomial& f, const Ring& target, int offset);

}  // namespace idealcalc
