#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hodgeopt/errors.hpp"

namespace hodgeopt {

/// Set of basis directions, bit i standing for axis i+1.
using IndexMask = std::uint64_t;

/// Hard ceiling imposed by the 64-bit mask representation.
inline constexpr int kMaxMaskDimension = 64;

/// Default ceiling for solver inputs; C(n, n/2) is the real limit.
inline constexpr int kDefaultMaxDimension = 32;

namespace detail {

inline constexpr auto kBinomialTable = [] {
  std::array<std::array<std::uint64_t, kMaxMaskDimension + 1>, kMaxMaskDimension + 1> t{};
  for (int n = 0; n <= kMaxMaskDimension; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}();

// Bits strictly above position `bit`.
constexpr IndexMask bits_above(int bit) {
  return bit >= kMaxMaskDimension - 1 ? IndexMask{0} : (~IndexMask{0} << (bit + 1));
}

constexpr IndexMask full_mask(int n) {
  return n >= kMaxMaskDimension ? ~IndexMask{0} : ((IndexMask{1} << n) - 1);
}

/// Sign of the permutation that sorts the concatenation (I, J) of two
/// disjoint sorted index sets: (-1)^#{(i, j) : i in I, j in J, i > j}.
constexpr int shuffle_sign(IndexMask first, IndexMask second) {
  int inversions = 0;
  while (second != 0) {
    const int j = std::countr_zero(second);
    inversions += std::popcount(first & bits_above(j));
    second &= second - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

/// Lexicographic position of a k-subset of {0..n-1}.
constexpr std::size_t lex_rank(int n, IndexMask mask) {
  const int k = std::popcount(mask);
  std::uint64_t tail = 0;
  int i = 0;
  while (mask != 0) {
    const int c = std::countr_zero(mask);
    tail += kBinomialTable[n - 1 - c][k - i];
    mask &= mask - 1;
    ++i;
  }
  return static_cast<std::size_t>(kBinomialTable[n][k] - 1 - tail);
}

constexpr IndexMask lex_unrank(int n, int k, std::size_t position) {
  IndexMask mask = 0;
  std::uint64_t remaining = position;
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    // Count the combinations that start with `next` in this slot.
    for (;; ++next) {
      const std::uint64_t block = kBinomialTable[n - 1 - next][k - 1 - slot];
      if (remaining < block) break;
      remaining -= block;
    }
    mask |= IndexMask{1} << next;
    ++next;
  }
  return mask;
}

/// Visits every `choose`-subset of `pool` in increasing lexicographic order.
template <typename Visitor>
void for_each_subset(IndexMask pool, int choose, Visitor&& visit) {
  std::array<int, kMaxMaskDimension> elements{};
  int size = 0;
  for (IndexMask rest = pool; rest != 0; rest &= rest - 1) elements[size++] = std::countr_zero(rest);
  if (choose < 0 || choose > size) return;
  if (choose == 0) {
    visit(IndexMask{0});
    return;
  }
  std::array<int, kMaxMaskDimension> pos{};
  for (int i = 0; i < choose; ++i) pos[i] = i;
  for (;;) {
    IndexMask subset = 0;
    for (int i = 0; i < choose; ++i) subset |= IndexMask{1} << elements[pos[i]];
    visit(subset);
    int i = choose - 1;
    while (i >= 0 && pos[i] == size - choose + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < choose; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace detail

constexpr std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxMaskDimension) return 0;
  return detail::kBinomialTable[n][k];
}

/// A strictly increasing tuple of axis labels in [1, n], the index of one
/// basis k-form e_{i1} ^ ... ^ e_{ik}.
class MultiIndex {
 public:
  MultiIndex(int n, std::initializer_list<int> indices)
      : MultiIndex(n, std::span<const int>(indices.begin(), indices.size())) {}

  MultiIndex(int n, std::span<const int> indices) : n_(n) {
    check_dimension(n);
    int previous = 0;
    for (int index : indices) {
      if (index < 1 || index > n) {
        throw DomainError("multi-index entry " + std::to_string(index) + " outside [1, " +
                          std::to_string(n) + "]");
      }
      if (index <= previous) throw DomainError("multi-index must be strictly increasing");
      mask_ |= IndexMask{1} << (index - 1);
      previous = index;
    }
  }

  static MultiIndex from_mask(int n, IndexMask mask) {
    check_dimension(n);
    if ((mask & ~detail::full_mask(n)) != 0) throw DomainError("mask has bits beyond dimension");
    MultiIndex out;
    out.n_ = n;
    out.mask_ = mask;
    return out;
  }

  int dimension() const noexcept { return n_; }
  int grade() const noexcept { return std::popcount(mask_); }
  IndexMask mask() const noexcept { return mask_; }

  /// One-based labels in increasing order.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(grade()));
    for (IndexMask rest = mask_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  MultiIndex complement() const { return from_mask(n_, detail::full_mask(n_) & ~mask_); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  MultiIndex() = default;

  static void check_dimension(int n) {
    if (n < 1 || n > kMaxMaskDimension) {
      throw DomainError("dimension " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxMaskDimension) + "]");
    }
  }

  int n_ = 0;
  IndexMask mask_ = 0;
};

/// Position of `index` among all grade-k multi-indices in lexicographic order.
inline std::size_t rank_multi_index(const MultiIndex& index) {
  return detail::lex_rank(index.dimension(), index.mask());
}

inline MultiIndex unrank_multi_index(int n, int k, std::size_t position) {
  if (n < 1 || n > kMaxMaskDimension || k < 0 || k > n) throw DomainError("invalid (n, k) for unrank");
  if (position >= binomial(n, k)) throw DomainError("rank out of range");
  return MultiIndex::from_mask(n, detail::lex_unrank(n, k, position));
}

}  // namespace hodgeopt
