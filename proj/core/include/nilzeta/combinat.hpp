#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "nilzeta/laurent_polynomial.hpp"

namespace nilzeta::combinat {

/// A subset I of {1, ..., m-1}, stored strictly increasing. Indexes flag
/// types in F_q^m and descent types of permutations in S_m.
class FlagType {
 public:
  FlagType() = default;
  /// Throws std::invalid_argument unless every element lies in [1, m-1].
  FlagType(int m, std::vector<int> elements);

  /// Subset of [m-1] with bit (i-1) set for each member i.
  static FlagType from_mask(int m, std::uint32_t mask);

  int rank() const { return m_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(int i) const;
  std::uint32_t mask() const;

  bool is_subset_of(const FlagType& other) const { return (mask() & ~other.mask()) == 0; }
  FlagType complement() const;

  std::string to_string() const;

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  int m_ = 1;
  std::vector<int> elements_;
};

/// All 2^{m-1} subsets of [m-1], ordered by bitmask.
std::vector<FlagType> all_flag_types(int m);
/// All J with I ⊆ J ⊆ [m-1].
std::vector<FlagType> supersets(const FlagType& I);
/// All S ⊆ J.
std::vector<FlagType> subsets(const FlagType& J);

/// Element of S_m in one-line notation (w(1), ..., w(m)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  /// The order-reversing permutation i -> m + 1 - i.
  static Permutation longest(int m);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= m.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Left-to-right composition: (w * v)(i) = v(w(i)). With this convention
  /// the descent type of w * w0 is the complement of that of w.
  friend Permutation operator*(const Permutation& w, const Permutation& v);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Input range over S_m in lexicographic order; restartable via begin().
class Permutations {
 public:
  explicit Permutations(int m);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    explicit iterator(int m);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.done_; }

   private:
    Permutation current_{std::vector<int>{1}};
    bool done_ = true;
  };

  iterator begin() const { return iterator(m_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int m_;
};

inline Permutations permutations(int m) { return Permutations(m); }

FlagType descent_type(const Permutation& w);
int coxeter_length(const Permutation& w);

/// Gaussian binomial [a choose b]_q as a polynomial in q.
LaurentPolynomial gaussian_binomial(int a, int b);

/// b_{m,I}(q): number of flags of type I in F_q^m, built as the telescoping
/// product [m, i_l][i_l, i_{l-1}] ... [i_2, i_1].
LaurentPolynomial flag_poly(const FlagType& type);

/// Sum of q^{l(w)} over w in S_m with descent type inside I.
LaurentPolynomial flag_poly_via_descents(const FlagType& type);

/// Sum of q^{l(w)} over all of S_m.
LaurentPolynomial poincare_polynomial(int m);

}  // namespace nilzeta::combinat
