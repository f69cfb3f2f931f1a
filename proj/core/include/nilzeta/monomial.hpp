#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilzeta {

enum class VarKind : std::uint8_t { P, T, Q, Z, X, Y };

/// A symbolic variable. The derived ordering (kind first, then index) is
/// the fixed variable order p < t < q < z < X0 < X1 < ... < Y1 < Y2 < ...
/// used for every canonicalization in the library.
struct Variable {
  VarKind kind = VarKind::P;
  int index = 0;

  static constexpr Variable p() { return {VarKind::P, 0}; }
  static constexpr Variable t() { return {VarKind::T, 0}; }
  static constexpr Variable q() { return {VarKind::Q, 0}; }
  static constexpr Variable z() { return {VarKind::Z, 0}; }
  static constexpr Variable X(int i) { return {VarKind::X, i}; }
  static constexpr Variable Y(int i) { return {VarKind::Y, i}; }

  std::string name() const;
  static std::optional<Variable> parse(std::string_view name);

  auto operator<=>(const Variable&) const = default;
};

/// Product of variables raised to nonzero integer powers. Zero exponents are
/// never stored; the empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);
  Monomial(std::initializer_list<Entry> entries);

  bool is_one() const { return entries_.empty(); }
  int exponent(Variable v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  /// Lexicographically positive exponent vector under the variable order.
  bool is_canonical() const { return !entries_.empty() && entries_.front().second > 0; }

  Monomial inverse() const;
  Monomial pow(int e) const;
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  std::string to_string() const;

  /// Dense lexicographic comparison of exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace nilzeta
