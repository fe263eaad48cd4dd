#include "idealcalc/polynomial.hpp"

#include <algorithm>

namespace idealcalc {

namespace {

// Sort descending, merge equal monomials, drop zeros.
std::vector<Term> normalize(const Field& F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return MonomialOrder::cmp_grevlex(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (F.is_zero(out.back().coeff)) out.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  terms_ = normalize(ring_->field(), std::move(terms));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "poly add");
  const Field& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = MonomialOrder::cmp_grevlex(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  const Field& F = ring_->field();
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "poly mul");
  const Field& F = ring_->field();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = F.mul(t.coeff, c);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::constant(const Ring& r, const Scalar& c) {
  Polynomial p(r);
  if (!r->field().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(const Ring& r, int i) {
  if (i < 0 || i >= r->num_vars()) throw PreconditionError("variable index out of range");
  Polynomial p(r);
  p.terms_.push_back({Monomial::variable(i), r->field().one()});
  return p;
}

Polynomial Polynomial::monomial(const Ring& r, const Monomial& m, const Scalar& c) {
  Polynomial p(r);
  if (!r->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial embed(const Polynomial& f, const Ring& target, int offset) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->num_vars(); ++i) m.set(i + offset, t.mono.exponent(i));
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial project(const Polynomial& f, const Ring& target, int offset) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < offset; ++i)
      if (t.mono.exponent(i) != 0) throw InternalError("project: polynomial involves an eliminated variable");
    for (int i = offset; i < f.ring()->num_vars(); ++i) m.set(i - offset, t.mono.exponent(i));
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace idealcalc
