#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hodgeopt/errors.hpp"
#include "hodgeopt/multi_index.hpp"

namespace hodgeopt {

/// Antisymmetric rank-k tensor over Euclidean R^n.
///
/// Only the coefficients on strictly increasing multi-indices are stored,
/// densely, in lexicographic order. Positive orientation is
/// e_1 ^ e_2 ^ ... ^ e_n. The coefficient on e_I is the plain signed sum over
/// permutations (no 1/k! averaging), so wedging m rows of a matrix yields
/// its m x m minors.
template <std::floating_point Real = double>
class KForm {
 public:
  using value_type = Real;

  KForm(int n, int k) : n_(n), k_(k) {
    check_shape(n, k);
    coeffs_.assign(static_cast<std::size_t>(binomial(n, k)), Real{0});
  }

  KForm(int n, int k, std::vector<Real> coeffs) : n_(n), k_(k), coeffs_(std::move(coeffs)) {
    check_shape(n, k);
    if (coeffs_.size() != binomial(n, k)) {
      throw DomainError("grade-" + std::to_string(k) + " form over R^" + std::to_string(n) + " needs " +
                        std::to_string(binomial(n, k)) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
    }
  }

  static KForm basis(const MultiIndex& index, Real value = Real{1}) {
    KForm out(index.dimension(), index.grade());
    out.coeffs_[rank_multi_index(index)] = value;
    return out;
  }

  static KForm scalar(int n, Real value) { return KForm(n, 0, {value}); }

  int dimension() const noexcept { return n_; }
  int grade() const noexcept { return k_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const Real> coeffs() const noexcept { return coeffs_; }
  std::span<Real> coeffs() noexcept { return coeffs_; }

  Real operator[](std::size_t position) const { return coeffs_[position]; }
  Real& operator[](std::size_t position) { return coeffs_[position]; }

  Real operator[](const MultiIndex& index) const {
    check_index(index);
    return coeffs_[rank_multi_index(index)];
  }
  Real& operator[](const MultiIndex& index) {
    check_index(index);
    return coeffs_[rank_multi_index(index)];
  }

  /// Tensor component for an arbitrary one-based index tuple: zero on
  /// repeated indices, otherwise the sorted coefficient times the sign of
  /// the sorting permutation.
  Real component(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != k_) throw DomainError("component needs exactly k indices");
    IndexMask seen = 0;
    int inversions = 0;
    for (int index : indices) {
      if (index < 1 || index > n_) throw DomainError("component index outside [1, n]");
      const IndexMask bit = IndexMask{1} << (index - 1);
      if (seen & bit) return Real{0};
      inversions += std::popcount(seen & detail::bits_above(index - 1));
      seen |= bit;
    }
    const Real value = coeffs_[detail::lex_rank(n_, seen)];
    return (inversions & 1) ? -value : value;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Real c) { return c == Real{0}; });
  }

  KForm& operator+=(const KForm& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  KForm& operator-=(const KForm& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  KForm& operator*=(Real factor) {
    for (Real& c : coeffs_) c *= factor;
    return *this;
  }

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, Real factor) { return a *= factor; }
  friend KForm operator*(Real factor, KForm a) { return a *= factor; }
  friend KForm operator-(KForm a) { return a *= Real{-1}; }

  friend bool operator==(const KForm&, const KForm&) = default;

 private:
  static void check_shape(int n, int k) {
    if (n < 1 || n > kMaxMaskDimension) {
      throw DomainError("form dimension " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxMaskDimension) + "]");
    }
    if (k < 0 || k > n) throw DomainError("form grade " + std::to_string(k) + " outside [0, n]");
  }

  void check_index(const MultiIndex& index) const {
    if (index.dimension() != n_ || index.grade() != k_) throw DomainError("multi-index shape mismatch");
  }

  void check_same_shape(const KForm& other) const {
    if (other.n_ != n_ || other.k_ != k_) throw DomainError("form shape mismatch");
  }

  int n_;
  int k_;
  std::vector<Real> coeffs_;
};

template <std::floating_point Real>
KForm<Real> from_vector(std::span<const Real> v) {
  if (v.empty()) throw DomainError("cannot build a 1-form from an empty vector");
  return KForm<Real>(static_cast<int>(v.size()), 1, std::vector<Real>(v.begin(), v.end()));
}

template <std::floating_point Real>
KForm<Real> from_vector(const std::vector<Real>& v) {
  return from_vector(std::span<const Real>(v));
}

template <std::floating_point Real>
std::vector<Real> to_vector(const KForm<Real>& form) {
  if (form.grade() != 1) throw DomainError("only a 1-form converts to a vector");
  return {form.coeffs().begin(), form.coeffs().end()};
}

/// Exterior product. Each output coefficient collects a_I * b_J over disjoint
/// sorted pairs, signed by the shuffle parity of (I, J); J only ranges over
/// subsets of the complement of I, so full n^k tensors are never formed.
template <std::floating_point Real>
KForm<Real> wedge(const KForm<Real>& a, const KForm<Real>& b) {
  const int n = a.dimension();
  if (b.dimension() != n) throw DomainError("wedge of forms over different dimensions");
  const int k = a.grade();
  const int l = b.grade();
  if (k + l > n) {
    throw DomainError("wedge grade " + std::to_string(k + l) + " exceeds dimension " + std::to_string(n));
  }
  KForm<Real> out(n, k + l);
  const IndexMask full = detail::full_mask(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Real ai = a[i];
    if (ai == Real{0}) continue;
    const IndexMask left = detail::lex_unrank(n, k, i);
    detail::for_each_subset(full & ~left, l, [&](IndexMask right) {
      const Real bj = b[detail::lex_rank(n, right)];
      if (bj == Real{0}) return;
      const Real term = ai * bj;
      out[detail::lex_rank(n, left | right)] += detail::shuffle_sign(left, right) > 0 ? term : -term;
    });
  }
  return out;
}

/// Euclidean Hodge star: e_I maps to sign(I, I^c) e_{I^c}.
template <std::floating_point Real>
KForm<Real> hodge(const KForm<Real>& a) {
  const int n = a.dimension();
  const int k = a.grade();
  KForm<Real> out(n, n - k);
  const IndexMask full = detail::full_mask(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const IndexMask index = detail::lex_unrank(n, k, i);
    const IndexMask rest = full & ~index;
    const Real c = a[i];
    out[detail::lex_rank(n, rest)] = detail::shuffle_sign(index, rest) > 0 ? c : -c;
  }
  return out;
}

template <std::floating_point Real>
Real inner(const KForm<Real>& a, const KForm<Real>& b) {
  if (a.dimension() != b.dimension() || a.grade() != b.grade()) {
    throw DomainError("inner product needs forms of equal dimension and grade");
  }
  Real sum{0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

template <std::floating_point Real>
Real norm(const KForm<Real>& a) {
  return std::sqrt(inner(a, a));
}

}  // namespace hodgeopt
