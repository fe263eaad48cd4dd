#include "idealcalc/ring.hpp"

#include <set>

namespace idealcalc {

PolynomialRing::PolynomialRing(std::vector<std::string> var_names, Field field)
    : names_(std::move(var_names)), field_(field) {
  if (names_.empty()) throw PreconditionError("ring needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw PreconditionError("at most " + std::to_string(kMaxUserVars) + " variables supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw PreconditionError("variable names must be distinct");
}

int PolynomialRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Ring make_ring(std::vector<std::string> var_names, const Field& field) {
  if (static_cast<int>(var_names.size()) > kMaxUserVars)
    throw PreconditionError("at most " + std::to_string(kMaxUserVars) + " variables supported");
  return std::make_shared<const PolynomialRing>(std::move(var_names), field);
}

Ring make_ring(int num_vars, const Field& field) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names), field);
}

Ring with_aux_var(const Ring& r, const std::string& aux_name) {
  std::vector<std::string> names;
  names.reserve(r->var_names().size() + 1);
  names.push_back(aux_name);
  names.insert(names.end(), r->var_names().begin(), r->var_names().end());
  // bypass the user-variable cap: the extra slot is reserved for this
  return std::make_shared<const PolynomialRing>(std::move(names), r->field());
}

}  // namespace idealcalc
