#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hodgeopt/direction_solver.hpp"
#include "hodgeopt/errors.hpp"
#include "hodgeopt/problem.hpp"

// Complex constraints A x = 0 on x in C^n with a real objective, Re or Im of
// the bilinear B . x = sum_j B_j x_j (no conjugation). Solved by mapping to
// R^(2n) with coordinates (Re x_1 .. Re x_n, Im x_1 .. Im x_n).

namespace hodgeopt {

enum class Part { kRe, kIm };

constexpr std::string_view to_string(Part part) { return part == Part::kRe ? "re" : "im"; }

template <std::floating_point Real = double>
class ComplexProblem {
 public:
  using Complex = std::complex<Real>;

  ComplexProblem(int n, std::vector<std::vector<Complex>> rows, std::vector<Complex> b, Part part = Part::kRe,
                 Mode mode = Mode::kMax)
      : n_(n), rows_(std::move(rows)), b_(std::move(b)), part_(part), mode_(mode) {
    if (n < 1) throw DomainError("complex problem needs n >= 1");
    if (static_cast<int>(rows_.size()) >= n) {
      throw DomainError("need fewer constraints than unknowns (m < n), got m = " +
                        std::to_string(rows_.size()) + ", n = " + std::to_string(n));
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (static_cast<int>(rows_[k].size()) != n) {
        throw DomainError("complex row " + std::to_string(k + 1) + " has the wrong length");
      }
      check_finite(rows_[k], "complex row " + std::to_string(k + 1));
    }
    if (static_cast<int>(b_.size()) != n) throw DomainError("complex objective has the wrong length");
    check_finite(b_, "complex objective");
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Complex>>& rows() const noexcept { return rows_; }
  std::span<const Complex> b() const noexcept { return b_; }
  Part part() const noexcept { return part_; }
  Mode mode() const noexcept { return mode_; }

 private:
  static void check_finite(const std::vector<Complex>& v, const std::string& what) {
    for (const Complex& z : v) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError(what + " has a non-finite entry");
    }
  }

  int n_;
  std::vector<std::vector<Complex>> rows_;
  std::vector<Complex> b_;
  Part part_;
  Mode mode_;
};

template <std::floating_point Real = double>
struct ComplexSolution {
  std::vector<std::complex<Real>> direction;
  std::vector<std::complex<Real>> raw;
  Real objective{0};
  Status status{Status::kOptimal};
};

template <std::floating_point Real>
struct RealifiedProblem {
  ConstraintSystem<Real> system;
  Objective<Real> objective;
};

/// Row A_k becomes (Re A_k, -Im A_k) and (Im A_k, Re A_k); B becomes
/// (Re B, -Im B) for part Re and (Im B, Re B) for part Im.
template <std::floating_point Real>
RealifiedProblem<Real> realify(const ComplexProblem<Real>& p) {
  const std::size_t n = static_cast<std::size_t>(p.n());
  std::vector<std::vector<Real>> rows;
  rows.reserve(2 * p.rows().size());
  for (const auto& row : p.rows()) {
    std::vector<Real> re_part(2 * n);
    std::vector<Real> im_part(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      re_part[j] = row[j].real();
      re_part[n + j] = -row[j].imag();
      im_part[j] = row[j].imag();
      im_part[n + j] = row[j].real();
    }
    rows.push_back(std::move(re_part));
    rows.push_back(std::move(im_part));
  }
  std::vector<Real> b(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto z = p.b()[j];
    if (p.part() == Part::kRe) {
      b[j] = z.real();
      b[n + j] = -z.imag();
    } else {
      b[j] = z.imag();
      b[n + j] = z.real();
    }
  }
  return {ConstraintSystem<Real>(2 * p.n(), std::move(rows)), Objective<Real>(std::move(b), p.mode())};
}

/// x_j = v_j + i v_{n+j}
template <std::floating_point Real>
std::vector<std::complex<Real>> fold_complex(std::span<const Real> v) {
  if (v.size() % 2 != 0) throw DomainError("folding needs an even-length vector");
  const std::size_t n = v.size() / 2;
  std::vector<std::complex<Real>> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {v[j], v[n + j]};
  return out;
}

/// max_k |sum_j A_kj x_j| / max(1, |A_k|), evaluated in complex arithmetic.
template <std::floating_point Real>
Real complex_residual(const ComplexProblem<Real>& p, std::span<const std::complex<Real>> x) {
  Real worst{0};
  for (const auto& row : p.rows()) {
    std::complex<Real> sum{0};
    Real row_sq{0};
    for (std::size_t j = 0; j < row.size(); ++j) {
      sum += row[j] * x[j];
      row_sq += std::norm(row[j]);
    }
    worst = std::max(worst, std::abs(sum) / std::max(Real{1}, std::sqrt(row_sq)));
  }
  return worst;
}

template <std::floating_point Real>
ComplexSolution<Real> fold_solution(const Solution<Real>& real) {
  return {fold_complex(std::span<const Real>(real.direction)), fold_complex(std::span<const Real>(real.raw)),
          real.objective, real.status};
}

template <std::floating_point Real>
ComplexSolution<Real> solve_complex(const ComplexProblem<Real>& p, const SolverOptions<Real>& options = {}) {
  const RealifiedProblem<Real> real = realify(p);
  return fold_solution(optimal_direction(real.system, real.objective, options));
}

}  // namespace hodgeopt
