#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "nilzeta/rational_function.hpp"

namespace nilzeta {

/// The expression has no Taylor expansion in t at t = 0 (or involves
/// variables other than p and t).
class NonTaylorExpression : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// p^e as an exact rational; e may be negative.
mpq_class rational_power(const mpz_class& base, int e);

/// Exact coefficients c_0..c_K of t^k after setting p = p_value.
///
/// Factors (1 - p^b t^a) with a > 0 expand geometrically. Factors with a < 0
/// are turned around locally (1/(1-M) = -M^{-1}/(1-M^{-1})) and factors with
/// a = 0 are nonzero constants, so every value with a Taylor expansion at
/// t = 0 is accepted. A negative power of t left in the numerator afterwards
/// throws NonTaylorExpression.
std::vector<mpq_class> series_expand(const FactoredRationalFunction& f, const mpz_class& p_value, int K);

/// Degree-K truncated product of two coefficient lists.
std::vector<mpq_class> truncated_convolution(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int K);

}  // namespace nilzeta
