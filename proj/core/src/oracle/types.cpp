#include "nilzeta/oracle/types.hpp"

#include <numeric>
#include <stdexcept>

#include "nilzeta/formulas.hpp"
#include "nilzeta/series.hpp"

namespace nilzeta::oracle {

using combinat::FlagType;

TypeVector::TypeVector(FlagType I, std::vector<int> r) : I_(std::move(I)), r_(std::move(r)) {
  if (r_.size() != I_.size() + 1) throw std::invalid_argument("TypeVector: r must have one entry per element of I_0");
  if (r_[0] < 0) throw std::invalid_argument("TypeVector: r_0 must be non-negative");
  for (std::size_t k = 1; k < r_.size(); ++k) {
    if (r_[k] < 1) throw std::invalid_argument("TypeVector: r_i must be positive for i in I");
  }
}

TypeVector TypeVector::from_divisor_exponents(const std::vector<int>& a) {
  if (a.empty()) throw std::invalid_argument("TypeVector: empty divisor list");
  const int m = static_cast<int>(a.size());
  std::vector<int> elems;
  std::vector<int> r{a[0]};
  for (int i = 1; i < m; ++i) {
    int step = a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i - 1)];
    if (step < 0) throw std::invalid_argument("TypeVector: divisor exponents must ascend");
    if (step > 0) {
      elems.push_back(i);
      r.push_back(step);
    }
  }
  return TypeVector(FlagType(m, std::move(elems)), std::move(r));
}

std::vector<int> TypeVector::I0() const {
  std::vector<int> out{0};
  out.insert(out.end(), I_.elements().begin(), I_.elements().end());
  return out;
}

std::vector<int> TypeVector::divisor_exponents() const {
  const int m = rank();
  std::vector<int> a;
  a.reserve(static_cast<std::size_t>(m));
  const auto idx = I0();
  int level = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    level += r_[k];
    int block_end = (k + 1 < idx.size()) ? idx[k + 1] : m;
    while (static_cast<int>(a.size()) < block_end) a.push_back(level);
  }
  return a;
}

int TypeVector::index_exponent() const {
  const auto idx = I0();
  int total = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) total += r_[k] * (rank() - idx[k]);
  return total;
}

int TypeVector::total_r() const { return std::accumulate(r_.begin(), r_.end(), 0); }

std::string TypeVector::to_string() const {
  std::string out = "(I=" + I_.to_string() + ", r=(";
  for (std::size_t k = 0; k < r_.size(); ++k) out += (k ? "," : "") + std::to_string(r_[k]);
  return out + "))";
}

namespace {

// Calls f(r) for every admissible r over I_0 with sum_k r_k * weight_k <= budget.
template <typename F>
void for_each_r(const std::vector<int>& weights, int budget, F&& f) {
  std::vector<int> r(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == weights.size()) {
      f(r);
      return;
    }
    const int lo = k == 0 ? 0 : 1;
    for (int v = lo; v * weights[k] <= left; ++v) {
      r[k] = v;
      self(self, k + 1, left - v * weights[k]);
    }
  };
  rec(rec, 0, budget);
}

}  // namespace

std::vector<TypeVector> all_type_vectors(int m, int max_index_exponent) {
  std::vector<TypeVector> out;
  for (const auto& I : combinat::all_flag_types(m)) {
    std::vector<int> weights{m};
    for (int i : I.elements()) weights.push_back(m - i);
    for_each_r(weights, max_index_exponent, [&](const std::vector<int>& r) { out.emplace_back(I, r); });
  }
  return out;
}

TypeVector elementary_divisor_type(const HnfBasis& b, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("elementary_divisor_type: p must be at least 2");
  const int d = b.dimension();
  const auto divisors = smith_divisors(d, d, b.entries());
  std::vector<int> a;
  for (std::int64_t v : divisors) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (v != 1) throw std::invalid_argument("elementary_divisor_type: index is not a power of p");
    a.push_back(e);
  }
  return TypeVector::from_divisor_exponents(a);
}

mpz_class type_count_formula(const TypeVector& tv, std::int64_t p) {
  const int m = tv.rank();
  const mpz_class P(static_cast<long>(p));
  mpq_class value = 0;
  const LaurentPolynomial b = formulas::flag_poly_at_inverse_p(tv.I());
  for (const auto& [mono, c] : b.terms()) {
    value += mpq_class(c) * rational_power(P, mono.exponent(Variable::p()));
  }
  const auto idx = tv.I0();
  int e = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) e += tv.r()[k] * (m - idx[k]) * idx[k];
  value *= rational_power(P, e);
  if (value.get_den() != 1) throw std::logic_error("type_count_formula: non-integral count");
  return value.get_num();
}

TypeCount type_count_check(int m, const TypeVector& tv, std::int64_t p) {
  if (tv.rank() != m) throw std::invalid_argument("type_count_check: type rank differs from m");
  TypeCount out{type_count_formula(tv, p), 0};
  for_each_hnf(m, p, tv.index_exponent(), [&](const HnfBasis& h) {
    if (elementary_divisor_type(h, p) == tv) ++out.census;
  });
  return out;
}

namespace {

Monomial pt_monomial(int p_exp, int t_exp) { return Monomial{{Variable::p(), p_exp}, {Variable::t(), t_exp}}; }

void check_rank(int n, const TypeVector& tv) {
  if (n < 2 || tv.rank() != n - 1) throw std::invalid_argument("Z_Ir: type must have rank n - 1");
}

}  // namespace

FactoredRationalFunction Z_Ir_closed_form(int n, const TypeVector& tv) {
  check_rank(n, tv);
  const auto idx = tv.I0();
  const auto& r = tv.r();
  FactoredRationalFunction total;
  for (std::size_t jk = 0; jk < idx.size(); ++jk) {
    if (r[jk] == 0) continue;
    Monomial prefix;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int c = n - 1 - idx[k];
      prefix *= k < jk ? pt_monomial(0, r[k]) : pt_monomial(c * r[k], c * r[k]);
    }
    const int c = n - 1 - idx[jk];
    const Monomial ratio = pt_monomial(-c, 1 - c);  // z / x_j
    FactoredRationalFunction geometric_sum(LaurentPolynomial::one_minus(ratio.pow(r[jk])),
                                           FactoredRationalFunction::Denominator{{ratio, 1}});
    geometric_sum *= LaurentPolynomial(prefix);
    total += geometric_sum;
  }
  FactoredRationalFunction tail = FactoredRationalFunction::geometric(pt_monomial(0, 1));
  tail *= LaurentPolynomial(pt_monomial(0, tv.total_r()));
  return total + tail;
}

FactoredRationalFunction Z_Ir_direct_sum(int n, const TypeVector& tv) {
  check_rank(n, tv);
  const auto a = tv.divisor_exponents();
  const int R = tv.total_r();
  LaurentPolynomial head;
  for (int m3 = 0; m3 < R; ++m3) {
    int e = 0;
    for (int ak : a) e += std::max(ak - m3, 0);
    head.add_term(pt_monomial(e, e + m3), 1);
  }
  FactoredRationalFunction tail = FactoredRationalFunction::geometric(pt_monomial(0, 1));
  tail *= LaurentPolynomial(pt_monomial(0, R));
  return FactoredRationalFunction(head) + tail;
}

FactoredRationalFunction Z_Ir(int n, const TypeVector& tv) {
  FactoredRationalFunction closed = Z_Ir_closed_form(n, tv);
  if (!rat_equal(closed, Z_Ir_direct_sum(n, tv))) {
    throw std::logic_error("Z_Ir: closed form and direct sum disagree for " + tv.to_string());
  }
  return closed;
}

std::vector<mpz_class> typesum_coefficients(int n, std::int64_t p, int K) {
  const formulas::GroupFamilyIndex index(n);
  if (K < 0) throw std::invalid_argument("typesum_coefficients: K must be non-negative");
  const int m = index.w_rank();
  const mpz_class P(static_cast<long>(p));
  std::vector<mpq_class> sum(static_cast<std::size_t>(K) + 1, 0);
  for (const auto& I : combinat::all_flag_types(m)) {
    const LaurentPolynomial b = formulas::flag_poly_at_inverse_p(I);
    // Each unit of r_j contributes t-degree n-1-j through y_j.
    std::vector<int> weights{n - 1};
    for (int i : I.elements()) weights.push_back(n - 1 - i);
    for_each_r(weights, K, [&](const std::vector<int>& r) {
      const TypeVector tv(I, r);
      const auto idx = tv.I0();
      Monomial y_power;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const int j = idx[k];
        y_power *= pt_monomial((n + j) * (n - 1 - j) * r[k], (n - 1 - j) * r[k]);
      }
      FactoredRationalFunction term = Z_Ir_closed_form(n, tv);
      term *= b * LaurentPolynomial(y_power);
      const auto coeffs = series_expand(term, P, K);
      for (int k = 0; k <= K; ++k) sum[static_cast<std::size_t>(k)] += coeffs[static_cast<std::size_t>(k)];
    });
  }
  std::vector<mpz_class> out;
  for (const auto& c : sum) {
    if (c.get_den() != 1) throw std::logic_error("typesum_coefficients: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

FactoredRationalFunction typesum_closed_form(int n) {
  const formulas::GroupFamilyIndex index(n);
  const int m = index.w_rank();
  // x_i y_i and y_i z for i in {0, ..., n-2}; z = t.
  auto X = [n](int i) { return pt_monomial((n + 1 + i) * (n - 1 - i), 2 * (n - 1 - i)); };
  auto Y = [n](int i) { return pt_monomial((n + i) * (n - 1 - i), n - i); };
  auto under = [](const Monomial& mono) { return FactoredRationalFunction::underline(mono); };

  FactoredRationalFunction bracket_sum;
  for (const auto& I : combinat::all_flag_types(m)) {
    std::vector<int> idx{0};
    idx.insert(idx.end(), I.elements().begin(), I.elements().end());

    FactoredRationalFunction all_x(1L);
    for (int i : idx) all_x *= under(X(i));
    FactoredRationalFunction inner = all_x;
    // The j = 0 summand of Z(I, r) resums into all_x, so only j in I remains.
    for (int j : I.elements()) {
      FactoredRationalFunction piece = FactoredRationalFunction::geometric(Y(j));
      for (int i : I.elements()) {
        if (i < j) piece *= under(Y(i));
      }
      for (int i : idx) {
        if (i >= j) piece *= under(X(i));
      }
      inner += piece;
    }
    FactoredRationalFunction last = FactoredRationalFunction::geometric(pt_monomial(0, 1));
    for (int i : I.elements()) last *= under(Y(i));
    inner += last;
    inner *= formulas::flag_poly_at_inverse_p(I);
    bracket_sum += inner;
  }
  return FactoredRationalFunction::geometric(Y(0)) * bracket_sum;
}

}  // namespace nilzeta::oracle
