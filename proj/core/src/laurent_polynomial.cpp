#include "nilzeta/laurent_polynomial.hpp"

#include <algorithm>

#include "nilzeta/substitution.hpp"

namespace nilzeta {

Monomial SubstitutionMap::apply(const Monomial& m) const {
  Monomial out;
  for (const auto& [v, e] : m.entries()) {
    auto it = assignments_.find(v);
    out *= (it == assignments_.end()) ? Monomial(v, e) : it->second.pow(e);
  }
  return out;
}

SubstitutionMap SubstitutionMap::then(const SubstitutionMap& next) const {
  SubstitutionMap out;
  for (const auto& [v, image] : assignments_) out.assign(v, next.apply(image));
  for (const auto& [v, image] : next.assignments_) {
    if (!assignments_.contains(v)) out.assign(v, image);
  }
  return out;
}

LaurentPolynomial::LaurentPolynomial(long constant) : LaurentPolynomial(mpz_class(constant)) {}

LaurentPolynomial::LaurentPolynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

LaurentPolynomial::LaurentPolynomial(const Monomial& m, const mpz_class& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

LaurentPolynomial LaurentPolynomial::one_minus(const Monomial& m) {
  LaurentPolynomial out(1L);
  out.add_term(m, -1);
  return out;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::pair<int, int> LaurentPolynomial::degree_range(Variable v) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first.exponent(v);
  int hi = lo;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return {lo, hi};
}

void LaurentPolynomial::add_term(const Monomial& m, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Monomial& m) {
  if (m.is_one()) return *this;
  Terms shifted;
  for (auto& [mono, c] : terms_) shifted.emplace_hint(shifted.end(), mono * m, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.size() < b.size()) return b * a;
  LaurentPolynomial out;
  for (const auto& [mb, cb] : b.terms_) {
    for (const auto& [ma, ca] : a.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result(1L);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

void LaurentPolynomial::multiply_one_minus(const Monomial& m, int e) {
  for (int i = 0; i < e; ++i) {
    LaurentPolynomial shifted = *this * m;
    *this -= shifted;
  }
}

LaurentPolynomial LaurentPolynomial::substitute(const SubstitutionMap& map) const {
  LaurentPolynomial out;
  for (const auto& [m, c] : terms_) out.add_term(map.apply(m), c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

}  // namespace nilzeta
