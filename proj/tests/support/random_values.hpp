#pragma once

#include <random>
#include <vector>

#include "nilzeta/rational_function.hpp"

namespace nilzeta::testing {

/// Small random Laurent polynomials and rational functions over a fixed
/// handful of variables, for the algebraic property tests.
class RandomValues {
 public:
  explicit RandomValues(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Monomial monomial(int max_abs_exp = 2) {
    static const Variable vars[] = {Variable::p(), Variable::t(), Variable::X(0), Variable::Y(1)};
    Monomial m;
    for (Variable v : vars) m *= Monomial(v, uniform(-max_abs_exp, max_abs_exp));
    return m;
  }

  Monomial nontrivial_monomial() {
    Monomial m;
    while (m.is_one()) m = monomial();
    return m;
  }

  LaurentPolynomial polynomial(int max_terms = 4) {
    LaurentPolynomial out;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) out.add_term(monomial(), uniform(-5, 5));
    return out;
  }

  FactoredRationalFunction rational(int max_factors = 2) {
    FactoredRationalFunction::Denominator den;
    int factors = uniform(0, max_factors);
    for (int i = 0; i < factors; ++i) den[nontrivial_monomial()] += 1;
    return FactoredRationalFunction(polynomial(), den);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace nilzeta::testing
