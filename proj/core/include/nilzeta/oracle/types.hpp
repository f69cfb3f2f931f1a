#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilzeta/combinat.hpp"
#include "nilzeta/oracle/lattice.hpp"
#include "nilzeta/rational_function.hpp"

namespace nilzeta::oracle {

/// Elementary-divisor type (I, r) of a lattice in Z_p^m.
///
/// With I = {i_1 < ... < i_l} and r = (r_0, r_{i_1}, ..., r_{i_l}), the
/// divisors are p^{r_0} repeated i_1 times, p^{r_0 + r_{i_1}} repeated
/// i_2 - i_1 times, ..., p^{r_0 + ... + r_{i_l}} repeated m - i_l times.
/// r_0 >= 0 and r_i >= 1 for i in I, so every lattice has exactly one type.
class TypeVector {
 public:
  TypeVector(combinat::FlagType I, std::vector<int> r);

  /// Type of the ascending p-adic divisor exponents a_1 <= ... <= a_m.
  static TypeVector from_divisor_exponents(const std::vector<int>& a);

  int rank() const { return I_.rank(); }
  const combinat::FlagType& I() const { return I_; }
  /// r over I_0 = {0} ∪ I, in increasing order of the index.
  const std::vector<int>& r() const { return r_; }
  /// The members of I_0 in increasing order, aligned with r().
  std::vector<int> I0() const;

  std::vector<int> divisor_exponents() const;
  /// sum_{i in I_0} r_i (m - i): the lattice index is p to this power.
  int index_exponent() const;
  int total_r() const;

  std::string to_string() const;
  friend bool operator==(const TypeVector&, const TypeVector&) = default;

 private:
  combinat::FlagType I_;
  std::vector<int> r_;
};

/// Every type of rank m whose index exponent is at most max_index_exponent.
std::vector<TypeVector> all_type_vectors(int m, int max_index_exponent);

/// Smith normal form of b read off as a type. Throws std::invalid_argument
/// when the index of b is not a power of p.
TypeVector elementary_divisor_type(const HnfBasis& b, std::int64_t p);

/// b_{m,I}(p^{-1}) p^{sum_{i in I_0} r_i (m-i) i}, evaluated exactly.
mpz_class type_count_formula(const TypeVector& tv, std::int64_t p);

struct TypeCount {
  mpz_class formula;
  mpz_class census;
  bool agree() const { return formula == census; }
};

/// Formula count against a census of the index-p^{index_exponent} lattices in
/// Z^m whose elementary-divisor type is tv.
TypeCount type_count_check(int m, const TypeVector& tv, std::int64_t p);

/// Z(I, r) for G_n (tv over rank n-1) as the closed sum over j in I_0 of
///   prod_{i<j} z^{r_i} prod_{i>=j} x_i^{r_i} (1 - (z/x_j)^{r_j}) / (1 - z/x_j)
/// plus z^{sum r} / (1 - z), where x_i = (p t)^{n-1-i} and z = t.
FactoredRationalFunction Z_Ir_closed_form(int n, const TypeVector& tv);

/// Z(I, r) by summing (p t)^{e(m_3)} t^{m_3} over 0 <= m_3 < sum r, with
/// e(m_3) = sum_k max(a_k - m_3, 0), plus the tail t^{sum r} / (1 - t).
FactoredRationalFunction Z_Ir_direct_sum(int n, const TypeVector& tv);

/// Closed form, after checking it against the direct sum; throws
/// std::logic_error if the two routes disagree.
FactoredRationalFunction Z_Ir(int n, const TypeVector& tv);

/// Coefficients of t^0..t^K of
///   sum_I b_{n-1,I}(p^{-1}) sum_r prod_{j in I_0} y_j^{r_j} Z(I, r),
/// y_j = p^{(n+j)(n-1-j)} t^{n-1-j}, truncated to the types that can reach
/// degree K.
std::vector<mpz_class> typesum_coefficients(int n, std::int64_t p, int K);

/// The same sum resummed over r in closed form:
///   1/(1 - Y_0) sum_I b(p^{-1}) ( prod_{I_0} X_i/(1-X_i)
///     + sum_{j in I} 1/(1-Y_j) prod_{i in I, i<j} Y_i/(1-Y_i) prod_{i in I_0, i>=j} X_i/(1-X_i)
///     + 1/(1-z) prod_{I} Y_i/(1-Y_i) )
/// with X_i = x_i y_i, Y_i = y_i z.
FactoredRationalFunction typesum_closed_form(int n);

}  // namespace nilzeta::oracle
