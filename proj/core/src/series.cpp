#include "nilzeta/series.hpp"

#include <cstdlib>

namespace nilzeta {

mpq_class rational_power(const mpz_class& base, int e) {
  mpz_class mag;
  mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  if (e >= 0) return mpq_class(mag);
  if (mag == 0) throw std::domain_error("0 raised to a negative power");
  mpq_class out(mpz_class(1), mag);
  out.canonicalize();
  return out;
}

namespace {

void require_pt_only(const Monomial& m) {
  for (const auto& [v, e] : m.entries()) {
    if (v != Variable::p() && v != Variable::t()) {
      throw NonTaylorExpression("series_expand: unexpected variable " + v.name());
    }
  }
}

}  // namespace

std::vector<mpq_class> series_expand(const FactoredRationalFunction& f, const mpz_class& p_value, int K) {
  if (K < 0) throw std::invalid_argument("series_expand: K must be non-negative");
  if (p_value <= 0) throw std::invalid_argument("series_expand: p must be positive");

  LaurentPolynomial numerator = f.numerator();
  mpq_class scale = 1;
  struct Geometric {
    mpq_class ratio;
    int t_degree;
    int multiplicity;
  };
  std::vector<Geometric> factors;

  for (const auto& [m, k] : f.denominator()) {
    require_pt_only(m);
    int a = m.exponent(Variable::t());
    int b = m.exponent(Variable::p());
    if (a == 0) {
      mpq_class c = 1 - rational_power(p_value, b);
      if (c == 0) throw NonTaylorExpression("series_expand: factor " + m.to_string() + " vanishes at this p");
      for (int i = 0; i < k; ++i) scale /= c;
      continue;
    }
    if (a < 0) {
      Monomial flipped = m.inverse();
      numerator *= flipped.pow(k);
      if (k % 2 != 0) numerator = -numerator;
      a = -a;
      b = -b;
    }
    factors.push_back({rational_power(p_value, b), a, k});
  }

  std::vector<mpq_class> coeffs(static_cast<std::size_t>(K) + 1, 0);
  for (const auto& [m, c] : numerator.terms()) {
    require_pt_only(m);
    int a = m.exponent(Variable::t());
    if (a < 0) throw NonTaylorExpression("series_expand: numerator term " + m.to_string() + " has negative t-degree");
    if (a > K) continue;
    coeffs[a] += mpq_class(c) * rational_power(p_value, m.exponent(Variable::p()));
  }
  for (const auto& g : factors) {
    for (int rep = 0; rep < g.multiplicity; ++rep) {
      for (int i = g.t_degree; i <= K; ++i) coeffs[i] += g.ratio * coeffs[i - g.t_degree];
    }
  }
  if (scale != 1) {
    for (auto& c : coeffs) c *= scale;
  }
  return coeffs;
}

std::vector<mpq_class> truncated_convolution(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int K) {
  std::vector<mpq_class> out(static_cast<std::size_t>(K) + 1, 0);
  for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace nilzeta
