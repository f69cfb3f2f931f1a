#include "nilzeta/verify.hpp"

namespace nilzeta::verify {

using combinat::FlagType;
using formulas::W_term_leq;
using formulas::ZetaKind;

namespace {

int binomial2(int n) { return n * (n - 1) / 2; }

FactoredRationalFunction signed_monomial(int sign, int p_exp, int t_exp) {
  return FactoredRationalFunction(
      LaurentPolynomial(Monomial{{Variable::p(), p_exp}, {Variable::t(), t_exp}}, mpz_class(sign)));
}

}  // namespace

std::vector<Variable> w_variables(int m) {
  std::vector<Variable> vars;
  for (int i = 0; i < m; ++i) vars.push_back(Variable::X(i));
  for (int i = 1; i <= m; ++i) vars.push_back(Variable::Y(i));
  return vars;
}

bool check_lemma1(int m, const FlagType& J) {
  const auto invert = SubstitutionMap::inversion(w_variables(m));
  FactoredRationalFunction lhs = substitute(W_term_leq(m, J), invert);
  FactoredRationalFunction rhs;
  for (const auto& S : combinat::subsets(J)) rhs += W_term_leq(m, S);
  if ((J.size() + 1) % 2 != 0) rhs = -rhs;
  return rat_equal(lhs, rhs);
}

bool check_lemma2(int m, const FlagType& I) {
  const auto invert = SubstitutionMap::inversion(w_variables(m));
  FactoredRationalFunction lhs;
  for (const auto& J : combinat::supersets(I)) lhs += substitute(W_term_leq(m, J), invert);
  FactoredRationalFunction rhs;
  for (const auto& J : combinat::supersets(I.complement())) rhs += W_term_leq(m, J);
  if (m % 2 != 0) rhs = -rhs;
  return rat_equal(lhs, rhs);
}

bool check_W_funeq(int m) {
  std::vector<Variable> vars = w_variables(m);
  vars.push_back(Variable::p());
  const FactoredRationalFunction w = formulas::W_sum_leq(m);
  FactoredRationalFunction lhs = substitute(w, SubstitutionMap::inversion(vars));
  FactoredRationalFunction rhs = signed_monomial(m % 2 == 0 ? 1 : -1, binomial2(m), 0) * w;
  return rat_equal(lhs, rhs);
}

FuneqReport check_funeq(ZetaKind kind, const formulas::GroupFamilyIndex& index) {
  const int n = index.n();
  FuneqReport report{kind, n};
  switch (kind) {
    case ZetaKind::Subgroup:
      report.expected_sign = -1;
      report.expected_p_exponent = binomial2(2 * n - 1);
      report.expected_t_exponent = 2 * n - 1;
      break;
    case ZetaKind::Normal:
      report.expected_sign = -1;
      report.expected_p_exponent = binomial2(2 * n - 1);
      report.expected_t_exponent = 3 * n - 1;
      break;
    case ZetaKind::Hat:
      report.expected_sign = n % 2 == 0 ? 1 : -1;
      report.expected_p_exponent = 5 * binomial2(n);
      report.expected_t_exponent = 3 * n - 2;
      break;
  }
  const FactoredRationalFunction zeta = formulas::zeta_closed_form(kind, index);
  const std::vector<Variable> pt{Variable::p(), Variable::t()};
  FactoredRationalFunction inverted = substitute(zeta, SubstitutionMap::inversion(pt));
  FactoredRationalFunction expected =
      signed_monomial(report.expected_sign, report.expected_p_exponent, report.expected_t_exponent) * zeta;
  report.holds = rat_equal(inverted, expected);
  return report;
}

}  // namespace nilzeta::verify
