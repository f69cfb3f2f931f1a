// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nilzeta/combinat.hpp"
#include "nilzeta/formulas.hpp"
#include "nilzeta/oracle/census.hpp"
#include "nilzeta/oracle/types.hpp"
#include "nilzeta/series.hpp"
#include "nilzeta/verify.hpp"

namespace {

using namespace nilzeta;
using formulas::GroupFamilyIndex;
using formulas::ZetaKind;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Sets detail to the first failing instance.
using Check = std::function<bool(std::string& detail)>;

bool run_criterion(int id, const char* title, const Check& check) {
  const auto start = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = check(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s %2d %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", id, title, seconds_since(start),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  return pass;
}

int binom2(int a) { return a * (a - 1) / 2; }

bool census_matches(ZetaKind kind, std::string& detail) {
  struct Range {
    int n;
    long p;
    int max_k;
  };
  for (Range r : {Range{2, 2, 5}, Range{2, 3, 5}, Range{3, 2, 4}}) {
    const auto series = series_expand(formulas::zeta_closed_form(kind, GroupFamilyIndex(r.n)), r.p, r.max_k);
    for (int k = 0; k <= r.max_k; ++k) {
      const auto count = kind == ZetaKind::Subgroup ? oracle::count_subalgebras(r.n, r.p, k)
                                                    : oracle::count_ideals(r.n, r.p, k);
      if (series[static_cast<std::size_t>(k)] != mpq_class(static_cast<unsigned long>(count))) {
        detail = "n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) + " k=" + std::to_string(k) +
                 " census=" + std::to_string(count) + " series=" + series[static_cast<std::size_t>(k)].get_str();
        return false;
      }
    }
  }
  return true;
}

bool heisenberg(std::string& detail) {
  const auto start = Clock::now();
  const auto z = formulas::zeta_closed_form(ZetaKind::Subgroup, GroupFamilyIndex(2));
  // zeta(s) zeta(s-1) zeta(2s-2) zeta(2s-3) / zeta(3s-3), built factor by factor.
  FactoredRationalFunction product = formulas::zeta_factor(1, 0) * formulas::zeta_factor(1, 1) *
                                     formulas::zeta_factor(2, 2) * formulas::zeta_factor(2, 3);
  product *= LaurentPolynomial::one_minus(Monomial{{Variable::p(), 3}, {Variable::t(), 3}});
  if (!rat_equal(z, product)) {
    detail = "closed form " + z.to_string();
    return false;
  }
  if (seconds_since(start) >= 1.0) {
    detail = "took longer than 1 s";
    return false;
  }
  return true;
}

bool functional_equations(std::string& detail) {
  for (int n = 2; n <= 5; ++n) {
    struct Expected {
      ZetaKind kind;
      int sign;
      int a;
      int b;
    };
    for (Expected e : {Expected{ZetaKind::Subgroup, -1, binom2(2 * n - 1), 2 * n - 1},
                       Expected{ZetaKind::Normal, -1, binom2(2 * n - 1), 3 * n - 1},
                       Expected{ZetaKind::Hat, n % 2 == 0 ? 1 : -1, 5 * binom2(n), 3 * n - 2}}) {
      const auto start = Clock::now();
      const auto r = verify::check_funeq(e.kind, GroupFamilyIndex(n));
      const bool ok = r.holds && r.expected_sign == e.sign && r.expected_p_exponent == e.a &&
                      r.expected_t_exponent == e.b && seconds_since(start) < 60.0;
      if (!ok) {
        detail = std::string(formulas::to_string(e.kind)) + " n=" + std::to_string(n);
        return false;
      }
    }
  }
  for (int m = 1; m <= 4; ++m) {
    if (!verify::check_W_funeq(m)) {
      detail = "abstract W, m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

bool lemmas(std::string& detail) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& J : combinat::all_flag_types(m)) {
      if (!verify::check_lemma1(m, J)) {
        detail = "inversion lemma, m=" + std::to_string(m) + " J=" + J.to_string();
        return false;
      }
      if (!verify::check_lemma2(m, J)) {
        detail = "superset lemma, m=" + std::to_string(m) + " I=" + J.to_string();
        return false;
      }
    }
  }
  return true;
}

bool descents(std::string& detail) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& I : combinat::all_flag_types(m)) {
      if (combinat::flag_poly(I) != combinat::flag_poly_via_descents(I)) {
        detail = "flag_poly m=" + std::to_string(m) + " I=" + I.to_string();
        return false;
      }
    }
  }
  for (int m = 1; m <= 4; ++m) {
    if (!rat_equal(formulas::W_sum_leq(m), formulas::W_sum_leq_descent_form(m))) {
      detail = "W descent form m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

bool type_counts(std::string& detail) {
  for (int m = 1; m <= 3; ++m) {
    for (long p : {2L, 3L}) {
      for (const auto& tv : oracle::all_type_vectors(m, 4)) {
        const auto c = oracle::type_count_check(m, tv, p);
        if (!c.agree()) {
          detail = tv.to_string() + " p=" + std::to_string(p) + " formula=" + c.formula.get_str() +
                   " census=" + c.census.get_str();
          return false;
        }
      }
      // Every lattice of index p^k has exactly one type.
      for (int k = 0; k <= 4; ++k) {
        mpz_class by_type = 0;
        for (const auto& tv : oracle::all_type_vectors(m, k)) {
          if (tv.index_exponent() == k) by_type += oracle::type_count_formula(tv, p);
        }
        const auto total = oracle::count_sublattices(m, p, k);
        if (by_type != mpz_class(static_cast<unsigned long>(total))) {
          detail = "partition m=" + std::to_string(m) + " p=" + std::to_string(p) + " k=" + std::to_string(k);
          return false;
        }
      }
    }
  }
  return true;
}

bool two_routes(std::string& detail) {
  struct Case {
    int n;
    int K;
  };
  for (Case c : {Case{2, 5}, Case{3, 4}}) {
    const GroupFamilyIndex index(c.n);
    const auto target = formulas::zeta_factor(c.n, c.n * (c.n - 1)) *
                        substitute(formulas::W_sum_leq(index.w_rank()),
                                   formulas::numerical_data(ZetaKind::Subgroup, index));
    const auto expected = series_expand(target, 2, c.K);
    const auto sum = oracle::typesum_coefficients(c.n, 2, c.K);
    for (int k = 0; k <= c.K; ++k) {
      if (mpq_class(sum[static_cast<std::size_t>(k)]) != expected[static_cast<std::size_t>(k)]) {
        detail = "typesum n=" + std::to_string(c.n) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    for (const auto& tv : oracle::all_type_vectors(n - 1, 3 * (n - 1))) {
      if (tv.total_r() > 3) continue;
      if (!rat_equal(oracle::Z_Ir_closed_form(n, tv), oracle::Z_Ir_direct_sum(n, tv))) {
        detail = "Z_Ir n=" + std::to_string(n) + " " + tv.to_string();
        return false;
      }
    }
  }
  return true;
}

bool abscissae(std::string& detail) {
  for (int n = 2; n <= 5; ++n) {
    if (formulas::abscissa_leq(GroupFamilyIndex(n)) != n) {
      detail = "leq n=" + std::to_string(n);
      return false;
    }
  }
  if (formulas::abscissa_leq(GroupFamilyIndex(6)) != mpq_class(19, 3)) {
    detail = "leq n=6";
    return false;
  }
  for (int n : {6, 9, 12}) {
    if (formulas::abscissa_leq(GroupFamilyIndex(n)).get_den() == 1) {
      detail = "leq n=" + std::to_string(n) + " is integral";
      return false;
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto b = formulas::abscissa_from_denominator(formulas::zeta_closed_form(ZetaKind::Hat, GroupFamilyIndex(n)));
    if (b.value != n || !b.exact) {
      detail = "hat n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool positivity(std::string& detail) {
  for (int n = 2; n <= 5; ++n) {
    for (ZetaKind kind : {ZetaKind::Subgroup, ZetaKind::Normal, ZetaKind::Hat}) {
      const auto z = formulas::zeta_closed_form(kind, GroupFamilyIndex(n));
      for (long p : {2L, 3L}) {
        const auto coeffs = series_expand(z, p, 6);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          if (coeffs[k].get_den() != 1 || coeffs[k] < 0) {
            detail = std::string(formulas::to_string(kind)) + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
                     " k=" + std::to_string(k);
            return false;
          }
        }
        if (kind == ZetaKind::Subgroup) {
          mpz_class geometric = 0, power = 1;
          for (int i = 0; i < n; ++i, power *= p) geometric += power;
          if (coeffs[1] != mpq_class(geometric)) {
            detail = "t^1 coefficient n=" + std::to_string(n) + " p=" + std::to_string(p);
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  auto record = [&](int id, const char* title, const Check& check) { failures += run_criterion(id, title, check) ? 0 : 1; };
  record(1, "Heisenberg specialization", heisenberg);
  record(2, "census agreement, subalgebras", [](std::string& d) { return census_matches(ZetaKind::Subgroup, d); });
  record(3, "census agreement, ideals", [](std::string& d) { return census_matches(ZetaKind::Normal, d); });
  record(4, "functional equations", functional_equations);
  record(5, "lemma suite", lemmas);
  record(6, "descent identity", descents);
  record(7, "type-count formula", type_counts);
  record(8, "two-route derivation", two_routes);
  record(9, "abscissae", abscissae);
  record(10, "positivity and t^1 coefficient", positivity);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
