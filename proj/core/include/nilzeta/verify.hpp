#pragma once

#include <string>

#include "nilzeta/formulas.hpp"

namespace nilzeta::verify {

// Index convention: the combinatorial lemmas are stated for W of rank m,
// i.e. W_{m,J}(X_0..X_{m-1}, Y_1..Y_m). For the group G_n this rank is
// m = n - 1; only check_funeq takes the group index n.

/// W_{m,J}(X^{-1}, Y^{-1}) == (-1)^{|J|+1} sum_{S ⊆ J} W_{m,S}(X, Y).
bool check_lemma1(int m, const combinat::FlagType& J);

/// sum_{J ⊇ I} W_{m,J}(X^{-1}, Y^{-1}) == (-1)^m sum_{J ⊇ I^c} W_{m,J}(X, Y).
bool check_lemma2(int m, const combinat::FlagType& I);

/// W_m(X^{-1}, Y^{-1}, p^{-1}) == (-1)^m p^{C(m,2)} W_m(X, Y, p), in the
/// abstract variables.
bool check_W_funeq(int m);

struct FuneqReport {
  formulas::ZetaKind kind;
  int n = 0;
  int expected_sign = 0;
  int expected_p_exponent = 0;
  int expected_t_exponent = 0;
  bool holds = false;
};

/// zeta(p^{-1}, t^{-1}) == sign * p^a * t^b * zeta(p, t) with
///   leq:    sign -1,      a = C(2n-1, 2), b = 2n - 1
///   normal: sign -1,      a = C(2n-1, 2), b = 3n - 1
///   hat:    sign (-1)^n,  a = 5 C(n, 2),  b = 3n - 2
FuneqReport check_funeq(formulas::ZetaKind kind, const formulas::GroupFamilyIndex& n);

/// X_0..X_{m-1}, Y_1..Y_m
std::vector<Variable> w_variables(int m);

}  // namespace nilzeta::verify
