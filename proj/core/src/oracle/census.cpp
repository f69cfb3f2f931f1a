#include "nilzeta/oracle/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace nilzeta::oracle {

LieRing::LieRing(const formulas::GroupFamilyIndex& index) : n_(index.n()), d_(index.hirsch_length()) {
  const int xn = n_ - 1;
  for (int i = 0; i < n_ - 1; ++i) {
    const int yi = n_ + i;
    constants_.push_back({i, xn, yi, 1});
    constants_.push_back({xn, i, yi, -1});
  }
}

std::string LieRing::basis_label(int i) const {
  if (i < 0 || i >= d_) throw std::out_of_range("LieRing::basis_label");
  return i < n_ ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - n_ + 1);
}

std::vector<std::int64_t> LieRing::bracket(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(d_), 0);
  for (const auto& c : constants_) {
    out[static_cast<std::size_t>(c.target)] +=
        c.coeff * a[static_cast<std::size_t>(c.left)] * b[static_cast<std::size_t>(c.right)];
  }
  return out;
}

std::vector<std::int64_t> LieRing::basis_vector(int i) const {
  std::vector<std::int64_t> e(static_cast<std::size_t>(d_), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

bool is_subalgebra(const LieRing& ring, const HnfBasis& h) {
  const int d = h.dimension();
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if (!lattice_contains(h, ring.bracket(h.row(a), h.row(b)))) return false;
    }
  }
  return true;
}

bool is_ideal(const LieRing& ring, const HnfBasis& h) {
  const int d = h.dimension();
  for (int e = 0; e < d; ++e) {
    const auto basis = ring.basis_vector(e);
    for (int b = 0; b < d; ++b) {
      if (!lattice_contains(h, ring.bracket(basis, h.row(b)))) return false;
    }
  }
  return true;
}

int default_worker_count() {
  if (const char* env = std::getenv("NILZETA_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Work is split by diagonal composition; each worker sums privately.
template <typename Pred>
std::uint64_t parallel_census(int d, std::int64_t p, int k, int workers, Pred pred) {
  if (p < 2) throw std::invalid_argument("census: p must be at least 2");
  if (k < 0) throw std::invalid_argument("census: k must be non-negative");
  const auto comps = compositions(d, k);
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(std::max(workers, 1)), 0);
  auto work = [&](std::size_t slot) {
    std::uint64_t count = 0;
    for (std::size_t c = next++; c < comps.size(); c = next++) {
      for_each_hnf_with_diagonal(p, comps[c], [&](const HnfBasis& h) { count += pred(h) ? 1 : 0; });
    }
    partial[slot] = count;
  };
  if (partial.size() == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < partial.size(); ++w) pool.emplace_back(work, w);
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace

std::uint64_t count_subalgebras(int n, std::int64_t p, int k, int workers) {
  const LieRing ring{formulas::GroupFamilyIndex(n)};
  return parallel_census(ring.dimension(), p, k, workers, [&ring](const HnfBasis& h) { return is_subalgebra(ring, h); });
}

std::uint64_t count_ideals(int n, std::int64_t p, int k, int workers) {
  const LieRing ring{formulas::GroupFamilyIndex(n)};
  return parallel_census(ring.dimension(), p, k, workers, [&ring](const HnfBasis& h) { return is_ideal(ring, h); });
}

std::uint64_t count_sublattices(int d, std::int64_t p, int k, int workers) {
  return parallel_census(d, p, k, workers, [](const HnfBasis&) { return true; });
}

CensusRow run_census(formulas::ZetaKind kind, int n, std::int64_t p, int k, int workers) {
  CensusRow row{n, p, k, kind};
  auto start = std::chrono::steady_clock::now();
  switch (kind) {
    case formulas::ZetaKind::Subgroup: row.count = count_subalgebras(n, p, k, workers); break;
    case formulas::ZetaKind::Normal: row.count = count_ideals(n, p, k, workers); break;
    case formulas::ZetaKind::Hat:
      throw std::invalid_argument("census is not available for the hat zeta function");
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

void write_census_csv(std::ostream& out, std::span<const CensusRow> rows) {
  out << "n,p,k,kind,count,elapsed_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.p << ',' << r.k << ',' << formulas::to_string(r.kind) << ',' << r.count << ','
        << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
  }
}

}  // namespace nilzeta::oracle
