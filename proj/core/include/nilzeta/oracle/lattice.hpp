#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nilzeta::oracle {

class HnfBasis;
template <typename F>
void for_each_hnf_with_diagonal(std::int64_t p, std::span<const int> exponents, F&& f);

/// Hermite normal form row basis of a finite-index sublattice of Z^d.
///
/// Row i starts at column i with a positive diagonal entry; every entry above
/// a diagonal entry is reduced into [0, diagonal). Distinct matrices of this
/// shape span distinct lattices, and every finite-index lattice has one.
class HnfBasis {
 public:
  HnfBasis(int d, std::vector<std::int64_t> entries);

  int dimension() const { return d_; }
  std::int64_t at(int row, int col) const { return entries_[static_cast<std::size_t>(row * d_ + col)]; }
  std::span<const std::int64_t> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i * d_), static_cast<std::size_t>(d_)};
  }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  /// Product of the diagonal, i.e. the lattice index.
  std::int64_t index() const;

  std::string to_string() const;

  friend bool operator==(const HnfBasis&, const HnfBasis&) = default;

 private:
  template <typename F>
  friend void for_each_hnf_with_diagonal(std::int64_t p, std::span<const int> exponents, F&& f);

  int d_;
  std::vector<std::int64_t> entries_;
};

/// Membership by back-substitution down the triangle.
bool lattice_contains(const HnfBasis& b, std::span<const std::int64_t> v);

/// Compositions (e_1..e_d) of k into d non-negative parts, lexicographic.
std::vector<std::vector<int>> compositions(int d, int k);

/// Calls f(const HnfBasis&) for every HNF with diagonal p^{e_1}, ..., p^{e_d}.
/// Off-diagonal entries advance odometer-style, last entry fastest.
template <typename F>
void for_each_hnf_with_diagonal(std::int64_t p, std::span<const int> exponents, F&& f) {
  const int d = static_cast<int>(exponents.size());
  std::vector<std::int64_t> diag(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::int64_t v = 1;
    for (int e = 0; e < exponents[static_cast<std::size_t>(j)]; ++e) v *= p;
    diag[static_cast<std::size_t>(j)] = v;
  }
  // Free slots (i, j) with i < j, each ranging over [0, diag[j]).
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (diag[static_cast<std::size_t>(j)] > 1) slots.emplace_back(i, j);
    }
  }
  std::vector<std::int64_t> entries(static_cast<std::size_t>(d * d), 0);
  for (int j = 0; j < d; ++j) entries[static_cast<std::size_t>(j * d + j)] = diag[static_cast<std::size_t>(j)];
  HnfBasis basis(d, entries);
  auto& cells = basis.entries_;
  while (true) {
    f(static_cast<const HnfBasis&>(basis));
    int s = static_cast<int>(slots.size()) - 1;
    for (; s >= 0; --s) {
      auto [i, j] = slots[static_cast<std::size_t>(s)];
      auto& cell = cells[static_cast<std::size_t>(i * d + j)];
      if (++cell < diag[static_cast<std::size_t>(j)]) break;
      cell = 0;
    }
    if (s < 0) return;
  }
}

/// Calls f for every sublattice of Z^d of index exactly p^k, once each.
template <typename F>
void for_each_hnf(int d, std::int64_t p, int k, F&& f) {
  for (const auto& comp : compositions(d, k)) for_each_hnf_with_diagonal(p, comp, f);
}

/// All sublattices of Z^d of index p^k.
std::vector<HnfBasis> hnf_enumerate(int d, std::int64_t p, int k);

/// Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix (rows x cols,
/// row-major), via Smith normal form. Zero divisors are omitted.
std::vector<std::int64_t> smith_divisors(int rows, int cols, std::vector<std::int64_t> entries);

}  // namespace nilzeta::oracle
