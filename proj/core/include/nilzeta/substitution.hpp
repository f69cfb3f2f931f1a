#pragma once

#include <map>

#include "nilzeta/monomial.hpp"

namespace nilzeta {

/// Assignment of monomials to variables. Unassigned variables stay fixed.
class SubstitutionMap {
 public:
  SubstitutionMap() = default;
  SubstitutionMap(std::initializer_list<std::pair<const Variable, Monomial>> init) : assignments_(init) {}

  void assign(Variable v, Monomial image) { assignments_[v] = std::move(image); }
  const std::map<Variable, Monomial>& assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }

  Monomial apply(const Monomial& m) const;

  /// The map that first applies *this and then `next`.
  SubstitutionMap then(const SubstitutionMap& next) const;

  /// v -> v^{-1} for every listed variable.
  template <typename Range>
  static SubstitutionMap inversion(const Range& vars) {
    SubstitutionMap s;
    for (const Variable& v : vars) s.assign(v, Monomial(v, -1));
    return s;
  }

 private:
  std::map<Variable, Monomial> assignments_;
};

}  // namespace nilzeta
