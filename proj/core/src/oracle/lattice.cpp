#include "nilzeta/oracle/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace nilzeta::oracle {

HnfBasis::HnfBasis(int d, std::vector<std::int64_t> entries) : d_(d), entries_(std::move(entries)) {
  if (d < 1 || entries_.size() != static_cast<std::size_t>(d * d)) {
    throw std::invalid_argument("HnfBasis: need a d x d matrix with d >= 1");
  }
  for (int i = 0; i < d; ++i) {
    if (at(i, i) <= 0) throw std::invalid_argument("HnfBasis: diagonal entries must be positive");
    for (int j = 0; j < i; ++j) {
      if (at(i, j) != 0) throw std::invalid_argument("HnfBasis: matrix is not upper triangular");
    }
    for (int r = 0; r < i; ++r) {
      if (at(r, i) < 0 || at(r, i) >= at(i, i)) {
        throw std::invalid_argument("HnfBasis: entry above the diagonal is not reduced");
      }
    }
  }
}

std::int64_t HnfBasis::index() const {
  std::int64_t out = 1;
  for (int i = 0; i < d_; ++i) out *= at(i, i);
  return out;
}

std::string HnfBasis::to_string() const {
  std::string out = "[";
  for (int i = 0; i < d_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < d_; ++j) out += (j ? " " : "") + std::to_string(at(i, j));
  }
  return out + "]";
}

bool lattice_contains(const HnfBasis& b, std::span<const std::int64_t> v) {
  const int d = b.dimension();
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::vector<std::int64_t> rest(v.begin(), v.end());
  for (int i = 0; i < d; ++i) {
    std::int64_t diag = b.at(i, i);
    if (rest[static_cast<std::size_t>(i)] % diag != 0) return false;
    std::int64_t c = rest[static_cast<std::size_t>(i)] / diag;
    if (c == 0) continue;
    for (int j = i; j < d; ++j) rest[static_cast<std::size_t>(j)] -= c * b.at(i, j);
  }
  return true;
}

std::vector<std::vector<int>> compositions(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("compositions: need d >= 1 and k >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d - 1) {
      current[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<HnfBasis> hnf_enumerate(int d, std::int64_t p, int k) {
  std::vector<HnfBasis> out;
  for_each_hnf(d, p, k, [&out](const HnfBasis& b) { out.push_back(b); });
  return out;
}

std::vector<std::int64_t> smith_divisors(int rows, int cols, std::vector<std::int64_t> a) {
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * cols + j)]; };
  const int r = std::min(rows, cols);
  std::vector<std::int64_t> diag;
  for (int t = 0; t < r; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    while (true) {
      int pi = -1;
      int pj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (at(i, j) != 0 && (pi < 0 || std::llabs(at(i, j)) < std::llabs(at(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      for (int j = 0; j < cols; ++j) std::swap(at(t, j), at(pi, j));
      for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pj));

      bool clean = true;
      const std::int64_t piv = at(t, t);
      for (int i = t + 1; i < rows; ++i) {
        std::int64_t q = at(i, t) / piv;
        if (q != 0) {
          for (int j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        }
        clean = clean && at(i, t) == 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        std::int64_t q = at(t, j) / piv;
        if (q != 0) {
          for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        }
        clean = clean && at(t, j) == 0;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into the pivot row and retry.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (at(i, j) % piv != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) at(t, j) += at(bad, j);
    }
    diag.push_back(std::llabs(at(t, t)));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace nilzeta::oracle
