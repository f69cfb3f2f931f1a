#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nilzeta/formulas.hpp"
#include "nilzeta/oracle/lattice.hpp"

namespace nilzeta::oracle {

/// Lie ring of G_n on Z^{2n-1} with basis x_1..x_n, y_1..y_{n-1} (coordinates
/// 0..n-1 and n..2n-2). The only nonzero brackets of basis vectors are
/// [x_i, x_n] = y_i = -[x_n, x_i].
class LieRing {
 public:
  struct Constant {
    int left;
    int right;
    int target;
    int coeff;
  };

  explicit LieRing(const formulas::GroupFamilyIndex& n);

  int dimension() const { return d_; }
  std::string basis_label(int i) const;
  const std::vector<Constant>& structure_constants() const { return constants_; }

  /// [a, b] via the structure-constant table.
  std::vector<std::int64_t> bracket(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  std::vector<std::int64_t> basis_vector(int i) const;

 private:
  int n_;
  int d_;
  std::vector<Constant> constants_;
};

bool is_subalgebra(const LieRing& ring, const HnfBasis& h);
bool is_ideal(const LieRing& ring, const HnfBasis& h);

/// NILZETA_WORKERS if set and positive, else the hardware concurrency.
int default_worker_count();

/// Lattices of index p^k in the Lie ring of G_n closed under the bracket.
std::uint64_t count_subalgebras(int n, std::int64_t p, int k, int workers = default_worker_count());
/// Lattices of index p^k with [L, H] inside H.
std::uint64_t count_ideals(int n, std::int64_t p, int k, int workers = default_worker_count());
/// All lattices of index p^k in Z^d (the census with no closure test).
std::uint64_t count_sublattices(int d, std::int64_t p, int k, int workers = default_worker_count());

struct CensusRow {
  int n = 0;
  std::int64_t p = 0;
  int k = 0;
  formulas::ZetaKind kind = formulas::ZetaKind::Subgroup;
  std::uint64_t count = 0;
  double elapsed_ms = 0;
};

/// Runs the census for kind leq (subalgebras) or normal (ideals) and times it.
CensusRow run_census(formulas::ZetaKind kind, int n, std::int64_t p, int k, int workers = default_worker_count());

/// Header "n,p,k,kind,count,elapsed_ms" followed by one line per row.
void write_census_csv(std::ostream& out, std::span<const CensusRow> rows);

}  // namespace nilzeta::oracle
