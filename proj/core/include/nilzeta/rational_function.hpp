#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "nilzeta/laurent_polynomial.hpp"
#include "nilzeta/substitution.hpp"

namespace nilzeta {

/// A substitution sent some denominator factor (1 - M) to zero.
class DegenerateSubstitution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Laurent polynomial numerator over a multiset of geometric factors
/// (1 - M). Every stored M is canonical: its first nonzero exponent under the
/// variable order is positive. Anti-canonical factors are rewritten on entry
/// via 1/(1 - M) = -M^{-1} / (1 - M^{-1}).
///
/// No gcd is ever taken. Value equality goes through rat_equal.
class FactoredRationalFunction {
 public:
  using Denominator = std::map<Monomial, int>;

  FactoredRationalFunction() = default;
  FactoredRationalFunction(long constant) : numerator_(constant) {}  // NOLINT(google-explicit-constructor)
  FactoredRationalFunction(LaurentPolynomial numerator)  // NOLINT(google-explicit-constructor)
      : numerator_(std::move(numerator)) {}
  explicit FactoredRationalFunction(const Monomial& m) : numerator_(m) {}

  /// numerator / prod (1 - M)^k, orienting each factor.
  FactoredRationalFunction(LaurentPolynomial numerator, const Denominator& denominator);

  /// 1 / (1 - m)
  static FactoredRationalFunction geometric(const Monomial& m);
  /// m / (1 - m)
  static FactoredRationalFunction underline(const Monomial& m);

  const LaurentPolynomial& numerator() const { return numerator_; }
  const Denominator& denominator() const { return denominator_; }
  int denominator_degree() const;

  FactoredRationalFunction operator-() const;
  FactoredRationalFunction& operator*=(const LaurentPolynomial& poly);

  std::string to_string() const;

  /// Structural identity; use rat_equal for value equality.
  friend bool operator==(const FactoredRationalFunction&, const FactoredRationalFunction&) = default;

 private:
  void divide_by_one_minus(const Monomial& m, int multiplicity);

  LaurentPolynomial numerator_;
  Denominator denominator_;
};

FactoredRationalFunction rat_add(const FactoredRationalFunction& f, const FactoredRationalFunction& g);
FactoredRationalFunction rat_mul(const FactoredRationalFunction& f, const FactoredRationalFunction& g);
bool rat_equal(const FactoredRationalFunction& f, const FactoredRationalFunction& g);

/// Exact image under a monomial substitution. Throws DegenerateSubstitution
/// when some factor (1 - M) maps to (1 - 1).
FactoredRationalFunction substitute(const FactoredRationalFunction& f, const SubstitutionMap& map);

inline FactoredRationalFunction operator+(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  return rat_add(f, g);
}
inline FactoredRationalFunction operator-(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  return rat_add(f, -g);
}
inline FactoredRationalFunction operator*(const FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  return rat_mul(f, g);
}
inline FactoredRationalFunction& operator+=(FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  return f = rat_add(f, g);
}
inline FactoredRationalFunction& operator*=(FactoredRationalFunction& f, const FactoredRationalFunction& g) {
  return f = rat_mul(f, g);
}

}  // namespace nilzeta
