#include <gtest/gtest.h>

#include <set>

#include "nilzeta/combinat.hpp"
#include "nilzeta/series.hpp"

namespace nilzeta::combinat {
namespace {

LaurentPolynomial q_poly(std::initializer_list<long> coeffs) {
  LaurentPolynomial out;
  int d = 0;
  for (long c : coeffs) out.add_term(Monomial(Variable::q(), d++), c);
  return out;
}

mpz_class eval_at(const LaurentPolynomial& f, long q) {
  mpq_class v = 0;
  for (const auto& [m, c] : f.terms()) v += mpq_class(c) * rational_power(q, m.exponent(Variable::q()));
  return v.get_num();
}

// Distinct k-dimensional subspaces of F_p^n, found by collecting the spans
// of all k-tuples of vectors as explicit sets.
long count_subspaces_by_span(int n, int k, int p) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  auto decode = [&](int code) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i, code /= p) v[static_cast<std::size_t>(i)] = code % p;
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * p + v[static_cast<std::size_t>(i)];
    return code;
  };
  int target = 1;
  for (int i = 0; i < k; ++i) target *= p;
  std::set<std::set<int>> spans;
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      std::set<int> span;
      std::vector<int> coeff(static_cast<std::size_t>(k), 0);
      int combos = 1;
      for (int i = 0; i < k; ++i) combos *= p;
      for (int c = 0; c < combos; ++c) {
        int rest = c;
        std::vector<int> sum(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k; ++i, rest /= p) {
          auto v = decode(tuple[static_cast<std::size_t>(i)]);
          for (int j = 0; j < n; ++j) sum[static_cast<std::size_t>(j)] += (rest % p) * v[static_cast<std::size_t>(j)];
        }
        for (auto& x : sum) x %= p;
        span.insert(encode(sum));
      }
      if (static_cast<int>(span.size()) == target) spans.insert(span);
      return;
    }
    for (int c = 0; c < total; ++c) {
      tuple[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return static_cast<long>(spans.size());
}

TEST(Permutations, CountsAndOrder) {
  auto collect = [](int m) {
    std::vector<Permutation> out;
    for (const auto& w : permutations(m)) out.push_back(w);
    return out;
  };
  EXPECT_EQ(collect(1), std::vector<Permutation>{Permutation::identity(1)});
  EXPECT_EQ(collect(3).size(), 6U);
  auto s4 = collect(4);
  ASSERT_EQ(s4.size(), 24U);
  EXPECT_EQ(s4.front(), Permutation::identity(4));
  EXPECT_EQ(s4.back(), Permutation({4, 3, 2, 1}));
  // Restartable: a second pass yields the same sequence.
  EXPECT_EQ(collect(4), s4);
  EXPECT_THROW(permutations(0), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(DescentType, Examples) {
  EXPECT_TRUE(descent_type(Permutation::identity(3)).empty());
  EXPECT_EQ(descent_type(Permutation({3, 2, 1})), FlagType(3, {1, 2}));
  EXPECT_EQ(descent_type(Permutation({2, 1, 3})), FlagType(3, {1}));
}

TEST(CoxeterLength, Examples) {
  EXPECT_EQ(coxeter_length(Permutation::identity(3)), 0);
  EXPECT_EQ(coxeter_length(Permutation({3, 2, 1})), 3);
  EXPECT_EQ(coxeter_length(Permutation({2, 1, 3})), 1);
}

TEST(LongestElement, TypeInversionAndLengthIdentity) {
  for (int m = 1; m <= 5; ++m) {
    const Permutation w0 = Permutation::longest(m);
    for (const auto& w : permutations(m)) {
      EXPECT_EQ(descent_type(w * w0), descent_type(w).complement());
      EXPECT_EQ(coxeter_length(w) + coxeter_length(w * w0), m * (m - 1) / 2);
    }
  }
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(5, 0), q_poly({1}));
  EXPECT_EQ(gaussian_binomial(2, 1), q_poly({1, 1}));
  EXPECT_EQ(gaussian_binomial(4, 2), q_poly({1, 1, 2, 1, 1}));
  EXPECT_THROW(gaussian_binomial(2, 3), std::invalid_argument);
}

TEST(GaussianBinomial, CountsSubspacesOverFiniteFields) {
  EXPECT_EQ(count_subspaces_by_span(4, 2, 2), 35);
  EXPECT_EQ(count_subspaces_by_span(4, 2, 3), 130);
  for (int p : {2, 3}) {
    EXPECT_EQ(eval_at(gaussian_binomial(4, 2), p), count_subspaces_by_span(4, 2, p));
    EXPECT_EQ(eval_at(gaussian_binomial(3, 1), p), count_subspaces_by_span(3, 1, p));
    EXPECT_EQ(eval_at(gaussian_binomial(3, 2), p), count_subspaces_by_span(3, 2, p));
  }
}

TEST(FlagPoly, Examples) {
  EXPECT_EQ(flag_poly(FlagType(4, {})), q_poly({1}));
  EXPECT_EQ(flag_poly(FlagType(2, {1})), q_poly({1, 1}));
  EXPECT_EQ(flag_poly(FlagType(3, {1, 2})), q_poly({1, 2, 2, 1}));
  EXPECT_EQ(flag_poly_via_descents(FlagType(3, {})), q_poly({1}));
  EXPECT_EQ(flag_poly_via_descents(FlagType(3, {1, 2})), q_poly({1, 2, 2, 1}));
  EXPECT_EQ(flag_poly_via_descents(FlagType(3, {1})), q_poly({1, 1, 1}));
}

TEST(FlagPoly, TelescopingProductMatchesDescentSum) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& I : all_flag_types(m)) {
      EXPECT_EQ(flag_poly(I), flag_poly_via_descents(I)) << "m=" << m << " I=" << I.to_string();
    }
  }
}

TEST(FlagPoly, FullFlagIsThePoincarePolynomial) {
  for (int m = 1; m <= 6; ++m) {
    LaurentPolynomial product(1L);
    for (int i = 1; i <= m; ++i) {
      LaurentPolynomial qi;
      for (int d = 0; d < i; ++d) qi.add_term(Monomial(Variable::q(), d), 1);
      product *= qi;
    }
    EXPECT_EQ(poincare_polynomial(m), product);
    const FlagType full = FlagType(m, {}).complement();
    const LaurentPolynomial flags = flag_poly(full);
    EXPECT_EQ(flags, product);
    EXPECT_EQ(flags.degree_range(Variable::q()).second, m * (m - 1) / 2);
    for (const auto& [mono, c] : flags.terms()) EXPECT_GT(c, 0);
  }
}

TEST(FlagType, Validation) {
  EXPECT_THROW(FlagType(3, {3}), std::invalid_argument);
  EXPECT_THROW(FlagType(3, {0}), std::invalid_argument);
  EXPECT_THROW(FlagType(3, {1, 1}), std::invalid_argument);
  EXPECT_EQ(FlagType(4, {2}).complement(), FlagType(4, {1, 3}));
  EXPECT_EQ(FlagType(1, {}).complement(), FlagType(1, {}));
  EXPECT_EQ(all_flag_types(4).size(), 8U);
  EXPECT_EQ(supersets(FlagType(4, {1})).size(), 4U);
  EXPECT_EQ(subsets(FlagType(4, {1, 3})).size(), 4U);
}

}  // namespace
}  // namespace nilzeta::combinat
