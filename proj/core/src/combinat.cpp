#include "nilzeta/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nilzeta::combinat {

FlagType::FlagType(int m, std::vector<int> elements) : m_(m), elements_(std::move(elements)) {
  if (m < 1) throw std::invalid_argument("FlagType: rank must be at least 1");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("FlagType: repeated element");
  }
  for (int i : elements_) {
    if (i < 1 || i > m - 1) throw std::invalid_argument("FlagType: element outside [1, m-1]");
  }
}

FlagType FlagType::from_mask(int m, std::uint32_t mask) {
  std::vector<int> elems;
  for (int i = 1; i < m; ++i) {
    if (mask & (1U << (i - 1))) elems.push_back(i);
  }
  return FlagType(m, std::move(elems));
}

bool FlagType::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

std::uint32_t FlagType::mask() const {
  std::uint32_t out = 0;
  for (int i : elements_) out |= 1U << (i - 1);
  return out;
}

FlagType FlagType::complement() const {
  std::uint32_t full = (m_ > 1) ? ((1U << (m_ - 1)) - 1) : 0;
  return from_mask(m_, full & ~mask());
}

std::string FlagType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

std::vector<FlagType> all_flag_types(int m) {
  std::vector<FlagType> out;
  std::uint32_t count = 1U << (m - 1);
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) out.push_back(FlagType::from_mask(m, mask));
  return out;
}

std::vector<FlagType> supersets(const FlagType& I) {
  std::vector<FlagType> out;
  for (const auto& J : all_flag_types(I.rank())) {
    if (I.is_subset_of(J)) out.push_back(J);
  }
  return out;
}

std::vector<FlagType> subsets(const FlagType& J) {
  std::vector<FlagType> out;
  for (const auto& S : all_flag_types(J.rank())) {
    if (S.is_subset_of(J)) out.push_back(S);
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection of [m]");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<int> out(w.images_.size());
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = v(w(i));
  return Permutation(std::move(out));
}

Permutations::Permutations(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("permutations: m must be at least 1");
}

Permutations::iterator::iterator(int m) : current_(Permutation::identity(m)), done_(false) {}

Permutations::iterator& Permutations::iterator::operator++() {
  std::vector<int> next = current_.images();
  if (std::next_permutation(next.begin(), next.end())) {
    current_ = Permutation(std::move(next));
  } else {
    done_ = true;
  }
  return *this;
}

FlagType descent_type(const Permutation& w) {
  std::vector<int> desc;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) desc.push_back(i);
  }
  return FlagType(w.size(), std::move(desc));
}

int coxeter_length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inversions += w(i) > w(j) ? 1 : 0;
  }
  return inversions;
}

LaurentPolynomial gaussian_binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) throw std::invalid_argument("gaussian_binomial: need 0 <= b <= a");
  // Row-by-row q-Pascal: [a,b] = [a-1,b-1] + q^b [a-1,b], coefficients as
  // dense vectors over q^0..q^{b(a-b)}.
  std::vector<std::vector<mpz_class>> row{{mpz_class(1)}};  // row[k] = [r choose k]
  for (int r = 1; r <= a; ++r) {
    std::vector<std::vector<mpz_class>> next(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
      std::vector<mpz_class> poly(static_cast<std::size_t>(k * (r - k)) + 1, 0);
      if (k >= 1) {
        const auto& left = row[static_cast<std::size_t>(k - 1)];
        for (std::size_t d = 0; d < left.size(); ++d) poly[d] += left[d];
      }
      if (k <= r - 1) {
        const auto& up = row[static_cast<std::size_t>(k)];
        for (std::size_t d = 0; d < up.size(); ++d) poly[d + static_cast<std::size_t>(k)] += up[d];
      }
      next[static_cast<std::size_t>(k)] = std::move(poly);
    }
    row = std::move(next);
  }
  LaurentPolynomial out;
  const auto& coeffs = row[static_cast<std::size_t>(b)];
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    out.add_term(Monomial(Variable::q(), static_cast<int>(d)), coeffs[d]);
  }
  return out;
}

LaurentPolynomial flag_poly(const FlagType& type) {
  LaurentPolynomial out(1L);
  int upper = type.rank();
  const auto& elems = type.elements();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    out *= gaussian_binomial(upper, *it);
    upper = *it;
  }
  return out;
}

LaurentPolynomial flag_poly_via_descents(const FlagType& type) {
  LaurentPolynomial out;
  for (const auto& w : permutations(type.rank())) {
    if (descent_type(w).is_subset_of(type)) out.add_term(Monomial(Variable::q(), coxeter_length(w)), 1);
  }
  return out;
}

LaurentPolynomial poincare_polynomial(int m) {
  LaurentPolynomial out;
  for (const auto& w : permutations(m)) out.add_term(Monomial(Variable::q(), coxeter_length(w)), 1);
  return out;
}

}  // namespace nilzeta::combinat
