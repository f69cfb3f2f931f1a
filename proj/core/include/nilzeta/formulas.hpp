#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nilzeta/combinat.hpp"
#include "nilzeta/rational_function.hpp"

namespace nilzeta::formulas {

enum class ZetaKind { Subgroup, Normal, Hat };

std::string_view to_string(ZetaKind kind);
/// Accepts "leq", "normal", "hat"; throws std::invalid_argument otherwise.
ZetaKind parse_kind(std::string_view text);

/// Index n >= 2 of the group G_n = <x_1..x_n, y_1..y_{n-1} | [x_i, x_n] = y_i>.
class GroupFamilyIndex {
 public:
  explicit GroupFamilyIndex(int n);
  int n() const { return n_; }
  /// Rank of the W functions, n - 1.
  int w_rank() const { return n_ - 1; }
  int hirsch_length() const { return 2 * n_ - 1; }

 private:
  int n_;
};

/// 1 / (1 - p^b t^a), the local factor zeta_p(a s - b).
FactoredRationalFunction zeta_factor(int a, int b);

/// W_{m,I}(X, Y) in X_0..X_{m-1}, Y_1..Y_m, written with
/// underline(Z) = Z / (1 - Z) as
///   X_0 prod_I X_i + Y_m prod_I Y_i
///   + sum_{j in I}      prod_{i in I, i <= j} Y_i prod_{i in I, i >= j} X_i
///   + sum_{j in I+{m}}  prod_{i in I, i <  j} Y_i prod_{i in I, i >= j} X_i
/// (every symbol underlined).
FactoredRationalFunction W_term_leq(int m, const combinat::FlagType& I);

/// sum over I of b_{m,I}(p^{-1}) W_{m,I}.
FactoredRationalFunction W_sum_leq(int m);

/// sum over w in S_m of p^{-l(w)} sum_{J containing nu(w)} W_{m,J}.
FactoredRationalFunction W_sum_leq_descent_form(int m);

/// sum over I of b_{m,I}(p^{-1}) prod_{i in I} X_i / (1 - X_i), X indexed 1..m-1.
FactoredRationalFunction W_sum_normal(int m);

/// b_{m,I}(p^{-1}) as a Laurent polynomial in p.
LaurentPolynomial flag_poly_at_inverse_p(const combinat::FlagType& I);

/// X_i, Y_i -> monomials in p and t = p^{-s}. Throws std::invalid_argument
/// for ZetaKind::Hat, which has no W factor.
SubstitutionMap numerical_data(ZetaKind kind, const GroupFamilyIndex& n);

/// The local zeta function of G_n at a generic prime, as a rational function
/// in p and t.
FactoredRationalFunction zeta_closed_form(ZetaKind kind, const GroupFamilyIndex& n);

/// zeta_p(s) zeta_p(s-1) zeta_p(2s-2) zeta_p(2s-3) / zeta_p(3s-3).
FactoredRationalFunction heisenberg_product_formula();

/// max{ n, ((n+l)(n-l-1)+1)/(n-l) : 1 <= l <= n-2 }.
mpq_class abscissa_leq(const GroupFamilyIndex& n);

struct AbscissaBound {
  mpq_class value;
  /// False when the numerator is not 1; the value is then only the largest
  /// candidate pole.
  bool exact = false;
};

/// max over factors (1 - p^b t^a) of (b + 1) / a.
AbscissaBound abscissa_from_denominator(const FactoredRationalFunction& f);

}  // namespace nilzeta::formulas
