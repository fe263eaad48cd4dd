#pragma once

#include <memory>
#include <vector>

#include "idealcalc/monomial.hpp"

namespace idealcalc {

// Monomial orders on the ring. All are global well-orders compatible with
// multiplication; elimination(k) makes any monomial touching the first k
// variables larger than any monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(int first_vars) { return MonomialOrder(Kind::elimination, first_vars); }

  Kind kind() const { return kind_; }
  int eliminated_vars() const { return elim_; }

  // Three-way compare; > 0 means a is larger in the order.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex:
        return cmp_grevlex(a, b);
      case Kind::lex:
        return cmp_lex(a, b);
      case Kind::elimination: {
        int da = 0, db = 0;
        for (int i = 0; i < elim_; ++i) {
          da += a.exponent(i);
          db += b.exponent(i);
        }
        if (da != db) return da < db ? -1 : 1;
        return cmp_grevlex(a, b);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && elim_ == o.elim_; }

  static int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      int d = a.exponent(i) - b.exponent(i);
      if (d != 0) return d > 0 ? -1 : 1;  // larger trailing exponent is smaller
    }
    return 0;
  }

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
      int d = a.exponent(i) - b.exponent(i);
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  }

 private:
  MonomialOrder(Kind kind, int elim) : kind_(kind), elim_(elim) {}

  Kind kind_;
  int elim_;
};

// Order on module monomials (monomial, component) of a twisted free module.
//
//   top:       twist-graded degree, then base order, then lower component wins
//   pot:       lower component wins outright, then base order (used to
//              eliminate a block of components in kernel computations)
//   schreyer:  compare images m * lead(g_c) in the previous level's order;
//              ties broken by lower component
class ModuleOrder {
 public:
  enum class Policy { top, pot, schreyer };

  static ModuleOrder top(MonomialOrder base, std::vector<int> twists) {
    ModuleOrder o;
    o.policy_ = Policy::top;
    o.base_ = base;
    o.twists_ = std::move(twists);
    return o;
  }

  static ModuleOrder pot(MonomialOrder base) {
    ModuleOrder o;
    o.policy_ = Policy::pot;
    o.base_ = base;
    return o;
  }

  struct SchreyerLead {
    Monomial mono;
    int comp = 0;
  };

  static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> ambient, std::vector<SchreyerLead> leads,
                              std::vector<int> twists) {
    ModuleOrder o;
    o.policy_ = Policy::schreyer;
    o.base_ = ambient->base_;
    o.ambient_ = std::move(ambient);
    o.leads_ = std::move(leads);
    o.twists_ = std::move(twists);
    return o;
  }

  Policy policy() const { return policy_; }
  const MonomialOrder& base() const { return base_; }
  const std::vector<int>& twists() const { return twists_; }

  int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
    switch (policy_) {
      case Policy::top: {
        int da = ma.degree() + twists_[static_cast<std::size_t>(ca)];
        int db = mb.degree() + twists_[static_cast<std::size_t>(cb)];
        if (da != db) return da < db ? -1 : 1;
        int c = base_.cmp(ma, mb);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
      }
      case Policy::pot: {
        if (ca != cb) return ca < cb ? 1 : -1;
        return base_.cmp(ma, mb);
      }
      case Policy::schreyer: {
        const auto& la = leads_[static_cast<std::size_t>(ca)];
        const auto& lb = leads_[static_cast<std::size_t>(cb)];
        int c = ambient_->cmp(ma * la.mono, la.comp, mb * lb.mono, lb.comp);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

 private:
  Policy policy_ = Policy::top;
  MonomialOrder base_ = MonomialOrder::grevlex();
  std::vector<int> twists_;
  std::shared_ptr<const ModuleOrder> ambient_;
  std::vector<SchreyerLead> leads_;
};

}  // namespace idealcalc
