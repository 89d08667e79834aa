#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hodgeopt/errors.hpp"
#include "hodgeopt/problem.hpp"

// Gram-Schmidt route to the optimal direction: orthonormalize the rows,
// strip their span from B, and the remainder B_perp is the answer. Shares
// no arithmetic with the wedge/Hodge solver so the two can check each other.

namespace hodgeopt {

template <std::floating_point Real = double>
struct OrthoBasis {
  int n = 0;
  std::vector<std::vector<Real>> vectors;  // orthonormal
  std::vector<Real> scales;                // Gram-Schmidt residual norms a_k
  std::vector<int> pivots;                 // input rows that contributed a vector
  int rank = 0;
};

namespace detail {

// v -= (u . v) u for every basis vector, in order.
template <std::floating_point Real>
void subtract_projections(std::vector<Real>& v, const std::vector<std::vector<Real>>& basis) {
  for (const auto& u : basis) {
    Real c{0};
    for (std::size_t i = 0; i < v.size(); ++i) c += u[i] * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
  }
}

}  // namespace detail

/// Modified Gram-Schmidt with one re-orthogonalization pass. A row whose
/// residual falls to `tolerance` times its own norm is dropped and counted
/// against the rank.
template <std::floating_point Real>
OrthoBasis<Real> orthonormalize(int n, const std::vector<std::vector<Real>>& rows,
                                Real tolerance = Real(1e-10)) {
  OrthoBasis<Real> basis;
  basis.n = n;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (static_cast<int>(rows[k].size()) != n) throw DomainError("row length differs from n");
    std::vector<Real> v = rows[k];
    const Real scale = norm2(std::span<const Real>(v));
    detail::subtract_projections(v, basis.vectors);
    detail::subtract_projections(v, basis.vectors);
    const Real residual = norm2(std::span<const Real>(v));
    if (!(residual > tolerance * scale)) continue;
    for (Real& x : v) x /= residual;
    basis.vectors.push_back(std::move(v));
    basis.scales.push_back(residual);
    basis.pivots.push_back(static_cast<int>(k));
  }
  basis.rank = static_cast<int>(basis.vectors.size());
  return basis;
}

template <std::floating_point Real>
OrthoBasis<Real> orthonormalize(const ConstraintSystem<Real>& sys, Real tolerance = Real(1e-10)) {
  return orthonormalize(sys.n(), sys.rows(), tolerance);
}

/// Orthonormal basis of the row space, or RankDeficientError.
template <std::floating_point Real>
OrthoBasis<Real> full_rank_basis(const ConstraintSystem<Real>& sys, Real tolerance = Real(1e-10)) {
  OrthoBasis<Real> basis = orthonormalize(sys, tolerance);
  if (basis.rank < sys.m()) {
    throw RankDeficientError("constraint rows are linearly dependent: rank " + std::to_string(basis.rank) +
                                 " < m = " + std::to_string(sys.m()),
                             basis.rank, sys.m());
  }
  return basis;
}

/// Keeps only the rows that Gram-Schmidt finds independent, in input order.
template <std::floating_point Real>
ConstraintSystem<Real> reduce_rows(const ConstraintSystem<Real>& sys, Real tolerance = Real(1e-10)) {
  const OrthoBasis<Real> basis = orthonormalize(sys, tolerance);
  std::vector<std::vector<Real>> kept;
  kept.reserve(basis.pivots.size());
  for (int k : basis.pivots) kept.push_back(sys.rows()[static_cast<std::size_t>(k)]);
  return ConstraintSystem<Real>(sys.n(), std::move(kept));
}

/// B minus its components along the basis (B_perp).
template <std::floating_point Real>
std::vector<Real> perpendicular_component(std::span<const Real> b, const OrthoBasis<Real>& basis) {
  if (static_cast<int>(b.size()) != basis.n) throw DomainError("vector length differs from basis dimension");
  std::vector<Real> out(b.begin(), b.end());
  detail::subtract_projections(out, basis.vectors);
  detail::subtract_projections(out, basis.vectors);
  return out;
}

/// Deterministic unit vector in the orthogonal complement of the basis: the
/// coordinate axis with the largest residual (lowest index on ties),
/// projected and normalized.
template <std::floating_point Real>
std::vector<Real> null_space_vector(const OrthoBasis<Real>& basis) {
  if (basis.rank >= basis.n) throw DomainError("row space fills R^n; no null direction");
  std::vector<Real> best;
  Real best_norm{-1};
  for (int j = 0; j < basis.n; ++j) {
    std::vector<Real> e(static_cast<std::size_t>(basis.n), Real{0});
    e[static_cast<std::size_t>(j)] = Real{1};
    std::vector<Real> r = perpendicular_component(std::span<const Real>(e), basis);
    const Real len = norm2(std::span<const Real>(r));
    if (len > best_norm) {
      best_norm = len;
      best = std::move(r);
    }
  }
  for (Real& x : best) x /= best_norm;
  return best;
}

/// Optimal direction from B_perp. `raw` carries the scale prod(a_k^2) B_perp
/// that x(t = 1) has in the exterior-algebra construction.
template <std::floating_point Real>
Solution<Real> oracle_direction(const ConstraintSystem<Real>& sys, const Objective<Real>& obj,
                                const SolverOptions<Real>& options = {}) {
  if (sys.n() != obj.n()) throw DomainError("objective length differs from constraint dimension");
  const OrthoBasis<Real> basis = full_rank_basis(sys, options.rank_tolerance);
  const std::span<const Real> b = obj.b();
  Solution<Real> out;
  if (sys.m() == 0) {
    const Real len = norm2(b);
    out.status = Status::kUnconstrained;
    out.raw.assign(b.begin(), b.end());
    for (Real v : b) out.direction.push_back(obj.sign() * v / len);
    out.objective = obj.sign() * len;
    return out;
  }
  std::vector<Real> perp = perpendicular_component(b, basis);
  const Real perp_norm = norm2(std::span<const Real>(perp));
  if (perp_norm <= options.degeneracy_tolerance * norm2(b)) {
    out.status = Status::kDegenerate;
    out.raw.assign(perp.size(), Real{0});
    out.direction = null_space_vector(basis);
    out.objective = Real{0};
    return out;
  }
  Real gram{1};
  for (Real a : basis.scales) gram *= a * a;
  out.status = Status::kOptimal;
  for (Real v : perp) {
    out.raw.push_back(gram * v);
    out.direction.push_back(obj.sign() * v / perp_norm);
  }
  out.objective = dot(b, std::span<const Real>(out.direction));
  return out;
}

/// B . x(t*) = t* prod(a_k^2) |B_perp|^2, negated for the minimizing branch.
template <std::floating_point Real>
Real oracle_value(const ConstraintSystem<Real>& sys, const Objective<Real>& obj, Real t_star,
                  const SolverOptions<Real>& options = {}) {
  if (!(t_star > Real{0})) throw DomainError("t* must be positive");
  if (sys.n() != obj.n()) throw DomainError("objective length differs from constraint dimension");
  const OrthoBasis<Real> basis = full_rank_basis(sys, options.rank_tolerance);
  const std::vector<Real> perp = perpendicular_component(obj.b(), basis);
  const Real perp_sq = dot(std::span<const Real>(perp), std::span<const Real>(perp));
  if (sys.m() > 0 && std::sqrt(perp_sq) <= options.degeneracy_tolerance * norm2(obj.b())) return Real{0};
  Real gram{1};
  for (Real a : basis.scales) gram *= a * a;
  return obj.sign() * t_star * gram * perp_sq;
}

/// Gaussian sample projected onto the null space of [A] and normalized.
/// Same (sys, seed) always gives the same vector.
template <std::floating_point Real>
std::vector<Real> sample_feasible(const ConstraintSystem<Real>& sys, std::uint64_t seed,
                                  Real rank_tolerance = Real(1e-10)) {
  const OrthoBasis<Real> basis = full_rank_basis(sys, rank_tolerance);
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> gauss;
  std::vector<Real> g(static_cast<std::size_t>(sys.n()));
  for (;;) {
    for (Real& x : g) x = gauss(rng);
    std::vector<Real> v = perpendicular_component(std::span<const Real>(g), basis);
    const Real len = norm2(std::span<const Real>(v));
    if (len > Real(1e-8) * norm2(std::span<const Real>(g))) {
      for (Real& x : v) x /= len;
      return v;
    }
  }
}

}  // namespace hodgeopt
