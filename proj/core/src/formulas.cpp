#include "nilzeta/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilzeta::formulas {

using combinat::FlagType;

std::string_view to_string(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::Subgroup: return "leq";
    case ZetaKind::Normal: return "normal";
    case ZetaKind::Hat: return "hat";
  }
  return "?";
}

ZetaKind parse_kind(std::string_view text) {
  if (text == "leq") return ZetaKind::Subgroup;
  if (text == "normal") return ZetaKind::Normal;
  if (text == "hat") return ZetaKind::Hat;
  throw std::invalid_argument("unknown zeta kind '" + std::string(text) + "' (expected leq, normal or hat)");
}

GroupFamilyIndex::GroupFamilyIndex(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("group index n must be at least 2");
}

FactoredRationalFunction zeta_factor(int a, int b) {
  return FactoredRationalFunction::geometric(Monomial{{Variable::p(), b}, {Variable::t(), a}});
}

namespace {

// prod underline(v) over the listed variables.
FactoredRationalFunction underline_product(const std::vector<Variable>& vars) {
  Monomial num;
  FactoredRationalFunction::Denominator den;
  for (Variable v : vars) {
    num *= Monomial(v);
    den[Monomial(v)] += 1;
  }
  return FactoredRationalFunction(LaurentPolynomial(num), den);
}

std::vector<Variable> select(const FlagType& I, VarKind kind, auto&& keep) {
  std::vector<Variable> out;
  for (int i : I.elements()) {
    if (keep(i)) out.push_back({kind, i});
  }
  return out;
}

}  // namespace

FactoredRationalFunction W_term_leq(int m, const FlagType& I) {
  if (I.rank() != m) throw std::invalid_argument("W_term_leq: flag type rank differs from m");
  auto all = [](int) { return true; };

  std::vector<Variable> first = select(I, VarKind::X, all);
  first.insert(first.begin(), Variable::X(0));
  std::vector<Variable> second = select(I, VarKind::Y, all);
  second.push_back(Variable::Y(m));

  FactoredRationalFunction total = underline_product(first) + underline_product(second);

  // Third sum: Y over i <= j and X over i >= j share the index j.
  for (int j : I.elements()) {
    auto ys = select(I, VarKind::Y, [j](int i) { return i <= j; });
    auto xs = select(I, VarKind::X, [j](int i) { return i >= j; });
    ys.insert(ys.end(), xs.begin(), xs.end());
    total += underline_product(ys);
  }
  // Fourth sum: strict i < j on the Y side, j also runs over m.
  std::vector<int> js = I.elements();
  js.push_back(m);
  for (int j : js) {
    auto ys = select(I, VarKind::Y, [j](int i) { return i < j; });
    auto xs = select(I, VarKind::X, [j](int i) { return i >= j; });
    ys.insert(ys.end(), xs.begin(), xs.end());
    total += underline_product(ys);
  }
  return total;
}

LaurentPolynomial flag_poly_at_inverse_p(const FlagType& I) {
  return combinat::flag_poly(I).substitute(SubstitutionMap{{Variable::q(), Monomial(Variable::p(), -1)}});
}

FactoredRationalFunction W_sum_leq(int m) {
  if (m < 1) throw std::invalid_argument("W_sum_leq: m must be at least 1");
  FactoredRationalFunction total;
  for (const auto& I : combinat::all_flag_types(m)) {
    FactoredRationalFunction term = W_term_leq(m, I);
    term *= flag_poly_at_inverse_p(I);
    total += term;
  }
  return total;
}

FactoredRationalFunction W_sum_leq_descent_form(int m) {
  if (m < 1) throw std::invalid_argument("W_sum_leq_descent_form: m must be at least 1");
  std::vector<FactoredRationalFunction> terms;
  for (const auto& J : combinat::all_flag_types(m)) terms.push_back(W_term_leq(m, J));

  FactoredRationalFunction total;
  for (const auto& w : combinat::permutations(m)) {
    FlagType nu = combinat::descent_type(w);
    FactoredRationalFunction inner;
    for (const auto& J : combinat::supersets(nu)) inner += terms[J.mask()];
    inner *= LaurentPolynomial(Monomial(Variable::p(), -combinat::coxeter_length(w)));
    total += inner;
  }
  return total;
}

FactoredRationalFunction W_sum_normal(int m) {
  if (m < 1) throw std::invalid_argument("W_sum_normal: m must be at least 1");
  FactoredRationalFunction total;
  for (const auto& I : combinat::all_flag_types(m)) {
    FactoredRationalFunction term = underline_product(select(I, VarKind::X, [](int) { return true; }));
    term *= flag_poly_at_inverse_p(I);
    total += term;
  }
  return total;
}

SubstitutionMap numerical_data(ZetaKind kind, const GroupFamilyIndex& index) {
  const int n = index.n();
  const Variable p = Variable::p();
  const Variable t = Variable::t();
  SubstitutionMap out;
  switch (kind) {
    case ZetaKind::Subgroup:
      for (int i = 0; i <= n - 2; ++i) {
        out.assign(Variable::X(i), Monomial{{p, (n + 1 + i) * (n - 1 - i)}, {t, 2 * (n - 1 - i)}});
      }
      for (int i = 1; i <= n - 1; ++i) {
        out.assign(Variable::Y(i), Monomial{{p, (n + i) * (n - 1 - i)}, {t, n - i}});
      }
      return out;
    case ZetaKind::Normal:
      for (int i = 1; i <= n - 2; ++i) {
        out.assign(Variable::X(i), Monomial{{p, (n + i) * (n - i - 1)}, {t, 2 * (n - i) - 1}});
      }
      return out;
    case ZetaKind::Hat:
      break;
  }
  throw std::invalid_argument("numerical_data: the hat zeta function has no W factor");
}

FactoredRationalFunction zeta_closed_form(ZetaKind kind, const GroupFamilyIndex& index) {
  const int n = index.n();
  switch (kind) {
    case ZetaKind::Subgroup: {
      FactoredRationalFunction out = substitute(W_sum_leq(index.w_rank()), numerical_data(kind, index));
      for (int i = 1; i <= n - 1; ++i) out *= zeta_factor(1, i);
      out *= zeta_factor(n, n * (n - 1));
      return out;
    }
    case ZetaKind::Normal: {
      FactoredRationalFunction out = substitute(W_sum_normal(index.w_rank()), numerical_data(kind, index));
      for (int i = 0; i <= n - 1; ++i) out *= zeta_factor(1, i);
      out *= zeta_factor(2 * n - 1, n * (n - 1));
      return out;
    }
    case ZetaKind::Hat: {
      FactoredRationalFunction out = zeta_factor(n, n * (n - 1));
      for (int i = 0; i <= n - 2; ++i) out *= zeta_factor(2, n + 1 + i);
      return out;
    }
  }
  throw std::logic_error("zeta_closed_form: unknown kind");
}

FactoredRationalFunction heisenberg_product_formula() {
  FactoredRationalFunction out = zeta_factor(1, 0) * zeta_factor(1, 1) * zeta_factor(2, 2) * zeta_factor(2, 3);
  out *= LaurentPolynomial::one_minus(Monomial{{Variable::p(), 3}, {Variable::t(), 3}});
  return out;
}

mpq_class abscissa_leq(const GroupFamilyIndex& index) {
  const int n = index.n();
  mpq_class best = n;
  for (int l = 1; l <= n - 2; ++l) {
    mpq_class candidate((n + l) * (n - l - 1) + 1, n - l);
    candidate.canonicalize();
    best = std::max(best, candidate);
  }
  return best;
}

AbscissaBound abscissa_from_denominator(const FactoredRationalFunction& f) {
  if (f.denominator().empty()) throw std::invalid_argument("abscissa_from_denominator: no denominator factors");
  AbscissaBound out;
  bool first = true;
  for (const auto& [m, k] : f.denominator()) {
    int a = m.exponent(Variable::t());
    int b = m.exponent(Variable::p());
    if (a < 1 || Monomial{{Variable::p(), b}, {Variable::t(), a}} != m) {
      throw std::invalid_argument("abscissa_from_denominator: factor (1 - " + m.to_string() +
                                  ") is not of the form 1 - p^b*t^a with a >= 1");
    }
    mpq_class candidate(b + 1, a);
    candidate.canonicalize();
    if (first || candidate > out.value) out.value = candidate;
    first = false;
  }
  out.exact = f.numerator() == LaurentPolynomial(1L);
  return out;
}

}  // namespace nilzeta::formulas
