#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "nilzeta/monomial.hpp"

namespace nilzeta {

class SubstitutionMap;

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept sorted by monomial, zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPolynomial(const mpz_class& constant);
  explicit LaurentPolynomial(const Monomial& m, const mpz_class& coeff = 1);
  explicit LaurentPolynomial(Variable v) : LaurentPolynomial(Monomial(v)) {}

  /// 1 - m
  static LaurentPolynomial one_minus(const Monomial& m);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class coefficient(const Monomial& m) const;

  /// Smallest and largest exponent of v over all terms (0, 0 for zero).
  std::pair<int, int> degree_range(Variable v) const;

  void add_term(const Monomial& m, const mpz_class& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Monomial& m);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Monomial& m) { return a *= m; }

  LaurentPolynomial pow(unsigned e) const;

  /// Multiply in place by (1 - m)^e; the hot path of cross-multiplication.
  void multiply_one_minus(const Monomial& m, int e = 1);

  LaurentPolynomial substitute(const SubstitutionMap& map) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

 private:
  Terms terms_;
};

}  // namespace nilzeta
