#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "hodgeopt/errors.hpp"
#include "hodgeopt/kform.hpp"
#include "hodgeopt/problem.hpp"
#include "hodgeopt/projection_oracle.hpp"

// Optimal unit direction for B . x subject to [A] x = 0 built from exterior
// algebra:
//
//   A^(m) = A_1 ^ ... ^ A_m
//   C     = *(B ^ A^(m))           grade n - m - 1
//   x     = *(A^(m) ^ C)           grade 1
//
// For n = 3, m = 1 this is the triple product A x (B x A). In an orthonormal
// frame of the row space x = |A^(m)|^2 B_perp up to a sign fixed by (n, m),
// so the sign is settled afterwards from B . x.

namespace hodgeopt {

/// A_1 ^ ... ^ A_m; the coefficient on each sorted index set is the
/// corresponding m x m minor of [A].
template <std::floating_point Real>
KForm<Real> constraint_form(const ConstraintSystem<Real>& sys) {
  if (sys.m() == 0) throw DomainError("constraint form needs at least one row");
  KForm<Real> out = from_vector(sys.row(0));
  for (int k = 1; k < sys.m(); ++k) out = wedge(out, from_vector(sys.row(k)));
  return out;
}

/// *(B ^ A^(m)); vanishes exactly when B lies in the row span.
template <std::floating_point Real>
KForm<Real> dual_form(const Objective<Real>& obj, const KForm<Real>& constraint) {
  if (obj.n() != constraint.dimension()) throw DomainError("objective length differs from form dimension");
  if (constraint.grade() + 1 > constraint.dimension()) throw DomainError("constraint grade leaves no room for B");
  return hodge(wedge(from_vector(obj.b()), constraint));
}

namespace detail {

template <std::floating_point Real>
void check_problem(const ConstraintSystem<Real>& sys, const Objective<Real>& obj,
                   const SolverOptions<Real>& options) {
  if (sys.n() != obj.n()) {
    throw DomainError("objective has length " + std::to_string(obj.n()) + ", constraints have n = " +
                      std::to_string(sys.n()));
  }
  if (sys.n() > options.max_dimension) {
    throw DomainError("dimension " + std::to_string(sys.n()) + " exceeds the configured cap " +
                      std::to_string(options.max_dimension));
  }
}

template <std::floating_point Real>
struct RawDirection {
  std::vector<Real> raw;
  Real scale{0};  // |A^(m)|^2 |B|, the natural size of raw
};

template <std::floating_point Real>
RawDirection<Real> raw_direction(const ConstraintSystem<Real>& sys, const Objective<Real>& obj) {
  const KForm<Real> constraint = constraint_form(sys);
  const KForm<Real> x = hodge(wedge(constraint, dual_form(obj, constraint)));
  return {to_vector(x), inner(constraint, constraint) * norm2(obj.b())};
}

}  // namespace detail

/// A x (B x A).
template <std::floating_point Real>
std::array<Real, 3> triple_product_direction(const std::array<Real, 3>& a, const std::array<Real, 3>& b) {
  const auto cross = [](const std::array<Real, 3>& u, const std::array<Real, 3>& v) {
    return std::array<Real, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  };
  const auto is_zero = [](const std::array<Real, 3>& u) { return u[0] == 0 && u[1] == 0 && u[2] == 0; };
  if (is_zero(a) || is_zero(b)) throw DomainError("triple product of a zero vector");
  return cross(a, cross(b, a));
}

/// Unit vector in the null space of a full-rank [A], used when every
/// feasible direction gives B . x = 0.
template <std::floating_point Real>
std::vector<Real> degenerate_direction(const ConstraintSystem<Real>& sys, Real rank_tolerance = Real(1e-10)) {
  return null_space_vector(full_rank_basis(sys, rank_tolerance));
}

template <std::floating_point Real>
Solution<Real> optimal_direction(const ConstraintSystem<Real>& sys, const Objective<Real>& obj,
                                 const SolverOptions<Real>& options = {}) {
  detail::check_problem(sys, obj, options);
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
  // Rank is judged on the Gram-Schmidt residuals, not on |A^(m)|, which
  // carries the arbitrary scale of every row.
  const OrthoBasis<Real> basis = full_rank_basis(sys, options.rank_tolerance);

  auto [raw, scale] = detail::raw_direction(sys, obj);
  const Real raw_norm = norm2(std::span<const Real>(raw));
  out.raw = std::move(raw);
  if (raw_norm <= options.degeneracy_tolerance * scale) {
    out.status = Status::kDegenerate;
    out.direction = null_space_vector(basis);
    out.objective = Real{0};
    return out;
  }
  const Real along = dot(b, std::span<const Real>(out.raw));
  const Real sigma = (along < Real{0} ? Real{-1} : Real{1}) * obj.sign();
  out.status = Status::kOptimal;
  out.direction.reserve(out.raw.size());
  for (Real v : out.raw) out.direction.push_back(sigma * v / raw_norm + Real{0});  // no -0
  out.objective = dot(b, std::span<const Real>(out.direction));
  return out;
}

/// B . x(t*) with x(t*) = t* raw and the sign of t chosen by the mode:
/// non-negative for max, non-positive for min, zero when degenerate.
template <std::floating_point Real>
Real objective_value(const ConstraintSystem<Real>& sys, const Objective<Real>& obj, Real t_star,
                     const SolverOptions<Real>& options = {}) {
  if (!(t_star > Real{0})) throw DomainError("t* must be positive");
  const Solution<Real> solution = optimal_direction(sys, obj, options);
  if (solution.status == Status::kDegenerate) return Real{0};
  return obj.sign() * t_star * std::abs(dot(obj.b(), std::span<const Real>(solution.raw)));
}

}  // namespace hodgeopt
