#pragma once

#include <memory>
#include <string>
#include <vector>

#include "idealcalc/field.hpp"
#include "idealcalc/monomial.hpp"

namespace idealcalc {

// Polynomial ring k[x_0, ..., x_{n}] with the standard grading (every
// variable has degree 1). Rings are immutable and shared by handle.
class PolynomialRing {
 public:
  PolynomialRing(std::vector<std::string> var_names, Field field);

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const Field& field() const { return field_; }

  // -1 when the name is not a variable of this ring.
  int var_index(const std::string& name) const;

  bool operator==(const PolynomialRing& o) const { return names_ == o.names_ && field_ == o.field_; }
  bool operator!=(const PolynomialRing& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  Field field_;
};

using Ring = std::shared_ptr<const PolynomialRing>;

Ring make_ring(std::vector<std::string> var_names, const Field& field);

// Convenience: x0..x{n-1} over F_p.
Ring make_ring(int num_vars, const Field& field);

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

inline void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!same_ring(a, b)) throw PreconditionError(std::string("ring mismatch in ") + what);
}

// Ring with one auxiliary variable prepended (used by intersection /
// quotient computations via elimination).
Ring with_aux_var(const Ring& r, const std::string& aux_name = "t@");

}  // namespace idealcalc
