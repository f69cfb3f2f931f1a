#include "nilzeta/rational_function.hpp"

#include <algorithm>

namespace nilzeta {

FactoredRationalFunction::FactoredRationalFunction(LaurentPolynomial numerator, const Denominator& denominator)
    : numerator_(std::move(numerator)) {
  for (const auto& [m, k] : denominator) divide_by_one_minus(m, k);
}

void FactoredRationalFunction::divide_by_one_minus(const Monomial& m, int multiplicity) {
  if (multiplicity == 0) return;
  if (m.is_one()) throw DegenerateSubstitution("denominator factor (1 - 1) vanishes");
  if (m.is_canonical()) {
    denominator_[m] += multiplicity;
    return;
  }
  // 1/(1 - M) = -M^{-1} / (1 - M^{-1})
  Monomial flipped = m.inverse();
  numerator_ *= flipped.pow(multiplicity);
  if (multiplicity % 2 != 0) numerator_ = -numerator_;
  denominator_[flipped] += multiplicity;
}

FactoredRationalFunction FactoredRationalFunction::geometric(const Monomial& m) {
  FactoredRationalFunction out(1L);
  out.divide_by_one_minus(m, 1);
  return out;
}

FactoredRationalFunction FactoredRationalFunction::underline(const Monomial& m) {
  FactoredRationalFunction out{LaurentPolynomial(m)};
  out.divide_by_one_minus(m, 1);
  return out;
}

int FactoredRationalFunction::denominator_degree() const {
  int total = 0;
  for (const auto& [m, k] : denominator_) total += k;
  return total;
}

FactoredRationalFunction FactoredRationalFunction::operator-() const {
  FactoredRationalFunction out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

FactoredRationalFunction& FactoredRationalFunction::operator*=(const LaurentPolynomial& poly) {
  numerator_ *= poly;
  return *this;
}

std::string FactoredRationalFunction::to_string() const {
  std::string out = "(" + numerator_.to_string() + ")";
  if (denominator_.empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& [m, k] : denominator_) {
    if (!first) out += '*';
    first = false;
    out += "(1 - " + m.to_string() + ")";
    if (k != 1) out += '^' + std::to_string(k);
  }
  out += ')';
  return out;
}

FactoredRationalFunction rat_add(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  if (f.numerator().is_zero()) return g;
  if (g.numerator().is_zero()) return f;
  FactoredRationalFunction::Denominator common = f.denominator();
  for (const auto& [m, k] : g.denominator()) {
    int& slot = common[m];
    slot = std::max(slot, k);
  }
  auto lift = [&common](const FactoredRationalFunction& h) {
    LaurentPolynomial num = h.numerator();
    for (const auto& [m, k] : common) {
      auto it = h.denominator().find(m);
      int have = it == h.denominator().end() ? 0 : it->second;
      num.multiply_one_minus(m, k - have);
    }
    return num;
  };
  return FactoredRationalFunction(lift(f) + lift(g), common);
}

FactoredRationalFunction rat_mul(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  FactoredRationalFunction::Denominator den = f.denominator();
  for (const auto& [m, k] : g.denominator()) den[m] += k;
  return FactoredRationalFunction(f.numerator() * g.numerator(), den);
}

bool rat_equal(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  // Factors shared by both sides cancel before cross-multiplying.
  LaurentPolynomial lhs = f.numerator();
  LaurentPolynomial rhs = g.numerator();
  const auto& df = f.denominator();
  const auto& dg = g.denominator();
  for (const auto& [m, k] : dg) {
    auto it = df.find(m);
    int shared = it == df.end() ? 0 : std::min(k, it->second);
    lhs.multiply_one_minus(m, k - shared);
  }
  for (const auto& [m, k] : df) {
    auto it = dg.find(m);
    int shared = it == dg.end() ? 0 : std::min(k, it->second);
    rhs.multiply_one_minus(m, k - shared);
  }
  return lhs == rhs;
}

FactoredRationalFunction substitute(const FactoredRationalFunction& f, const SubstitutionMap& map) {
  FactoredRationalFunction::Denominator den;
  for (const auto& [m, k] : f.denominator()) {
    Monomial image = map.apply(m);
    if (image.is_one()) {
      throw DegenerateSubstitution("substitution sends (1 - " + m.to_string() + ") to zero");
    }
    den[image] += k;
  }
  return FactoredRationalFunction(f.numerator().substitute(map), den);
}

}  // namespace nilzeta
