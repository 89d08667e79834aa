#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hodgeopt/errors.hpp"
#include "hodgeopt/multi_index.hpp"

namespace hodgeopt {

template <std::floating_point Real>
Real dot(std::span<const Real> a, std::span<const Real> b) {
  if (a.size() != b.size()) throw DomainError("dot product of vectors with different lengths");
  Real sum{0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

template <std::floating_point Real>
Real norm2(std::span<const Real> a) {
  return std::sqrt(dot(a, a));
}

enum class Mode { kMax, kMin };
enum class Status { kOptimal, kDegenerate, kUnconstrained };

constexpr std::string_view to_string(Mode mode) { return mode == Mode::kMax ? "max" : "min"; }

constexpr std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kDegenerate:
      return "degenerate";
    case Status::kUnconstrained:
      return "unconstrained";
  }
  return "unknown";
}

/// The m x n matrix [A] of A x = 0, stored by rows. Requires 0 <= m < n,
/// finite entries, and no zero row.
template <std::floating_point Real = double>
class ConstraintSystem {
 public:
  ConstraintSystem(int n, std::vector<std::vector<Real>> rows) : n_(n), rows_(std::move(rows)) {
    if (n < 1 || n > kMaxMaskDimension) {
      throw DomainError("dimension n = " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxMaskDimension) + "]");
    }
    if (static_cast<int>(rows_.size()) >= n) {
      throw DomainError("need fewer constraints than unknowns (m < n), got m = " +
                        std::to_string(rows_.size()) + ", n = " + std::to_string(n));
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& row = rows_[k];
      if (static_cast<int>(row.size()) != n) {
        throw DomainError("row " + std::to_string(k + 1) + " has length " + std::to_string(row.size()) +
                          ", expected " + std::to_string(n));
      }
      bool nonzero = false;
      for (Real v : row) {
        if (!std::isfinite(v)) throw DomainError("row " + std::to_string(k + 1) + " has a non-finite entry");
        nonzero = nonzero || v != Real{0};
      }
      if (!nonzero) throw DomainError("row " + std::to_string(k + 1) + " is the zero vector");
    }
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(rows_.size()); }

  std::span<const Real> row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::vector<Real>>& rows() const noexcept { return rows_; }

  /// max_k |A_k . x| / max(1, |A_k|)
  Real residual(std::span<const Real> x) const {
    Real worst{0};
    for (const auto& row : rows_) {
      const std::span<const Real> r(row);
      const Real scale = std::max(Real{1}, norm2(r));
      worst = std::max(worst, std::abs(dot(r, x)) / scale);
    }
    return worst;
  }

 private:
  int n_;
  std::vector<std::vector<Real>> rows_;
};

/// The vector B of B . x together with the direction of optimization.
template <std::floating_point Real = double>
class Objective {
 public:
  explicit Objective(std::vector<Real> b, Mode mode = Mode::kMax) : b_(std::move(b)), mode_(mode) {
    if (b_.empty()) throw DomainError("objective vector is empty");
    for (Real v : b_) {
      if (!std::isfinite(v)) throw DomainError("objective vector has a non-finite entry");
    }
    if (!(norm2(std::span<const Real>(b_)) > Real{0})) throw DomainError("objective vector is zero");
  }

  int n() const noexcept { return static_cast<int>(b_.size()); }
  std::span<const Real> b() const noexcept { return b_; }
  Mode mode() const noexcept { return mode_; }

  /// +1 for max, -1 for min.
  Real sign() const noexcept { return mode_ == Mode::kMax ? Real{1} : Real{-1}; }

 private:
  std::vector<Real> b_;
  Mode mode_;
};

template <std::floating_point Real = double>
struct Solution {
  std::vector<Real> direction;  // unit norm, feasible
  std::vector<Real> raw;        // unnormalized x(t) at t = 1
  Real objective{0};            // B . direction
  Status status{Status::kOptimal};
};

template <std::floating_point Real = double>
struct SolverOptions {
  /// Relative threshold on |raw| / (|A^(m)|^2 |B|) below which B is treated
  /// as lying in the row span.
  Real degeneracy_tolerance = Real(1e-12);
  /// Relative Gram-Schmidt residual below which a row counts as dependent.
  Real rank_tolerance = Real(1e-10);
  int max_dimension = kDefaultMaxDimension;
};

}  // namespace hodgeopt
