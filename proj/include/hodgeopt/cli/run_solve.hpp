#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hodgeopt/cli/problem_spec.hpp"
#include "hodgeopt/complex_extension.hpp"
#include "hodgeopt/direction_solver.hpp"
#include "hodgeopt/projection_oracle.hpp"
#include "json.hpp"

namespace hodgeopt::cli {

/// Agreement required between the solver and the oracle under --check.
inline constexpr double kCheckCosineTolerance = 1e-6;
inline constexpr double kCheckObjectiveTolerance = 1e-6;

struct RunOptions {
  bool check_oracle = false;
  bool reduce_rows = false;
  std::optional<double> degeneracy_tolerance;  // overrides the file
  int max_dimension = kDefaultMaxDimension;
};

/// Vectors are kept in real coordinates; for complex problems they are the
/// realified (Re..., Im...) vectors and are folded back on output.
struct SolveReport {
  Field field = Field::kReal;
  int n = 0;
  int m = 0;
  int rows_used = 0;
  Mode mode = Mode::kMax;
  Part part = Part::kRe;
  Status status = Status::kOptimal;
  std::vector<double> direction;
  std::vector<double> raw;
  double objective = 0;
  double residual_max = 0;

  bool checked = false;
  Status oracle_status = Status::kOptimal;
  std::vector<double> oracle_direction;
  double oracle_objective = 0;
  std::optional<double> cosine_agreement;  // both paths Optimal only
  double objective_gap = 0;                // relative
  bool check_passed = true;

  double solve_ms = 0;
  double oracle_ms = 0;
};

namespace detail {

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline ComplexProblem<double> reduce_complex_rows(const ComplexProblem<double>& p, double tolerance) {
  // A complex row is redundant exactly when both of its real rows are; keep
  // a complex row if either realified row adds rank.
  std::vector<std::vector<std::complex<double>>> kept;
  OrthoBasis<double> basis;
  basis.n = 2 * p.n();
  for (const auto& row : p.rows()) {
    ComplexProblem<double> single(p.n(), {row}, std::vector<std::complex<double>>(p.b().begin(), p.b().end()));
    const auto real = realify(single);
    bool adds = false;
    for (const auto& r : real.system.rows()) {
      std::vector<double> v = r;
      const double scale = norm2(std::span<const double>(v));
      hodgeopt::detail::subtract_projections(v, basis.vectors);
      hodgeopt::detail::subtract_projections(v, basis.vectors);
      const double residual = norm2(std::span<const double>(v));
      if (residual > tolerance * scale) {
        for (double& x : v) x /= residual;
        basis.vectors.push_back(std::move(v));
        adds = true;
      }
    }
    if (adds) kept.push_back(row);
  }
  return ComplexProblem<double>(p.n(), std::move(kept), std::vector<std::complex<double>>(p.b().begin(), p.b().end()),
                                p.part(), p.mode());
}

}  // namespace detail

inline SolverOptions<double> solver_options(const ProblemSpec& spec, const RunOptions& run) {
  SolverOptions<double> options;
  if (spec.degeneracy_tolerance) options.degeneracy_tolerance = *spec.degeneracy_tolerance;
  if (spec.rank_tolerance) options.rank_tolerance = *spec.rank_tolerance;
  if (run.degeneracy_tolerance) options.degeneracy_tolerance = *run.degeneracy_tolerance;
  options.max_dimension = run.max_dimension;
  return options;
}

/// Solves the problem, optionally cross-checking with the Gram-Schmidt
/// oracle. Solver errors propagate; an oracle disagreement only clears
/// `check_passed`.
inline SolveReport run_solve(const ProblemSpec& spec, const RunOptions& run = {}) {
  const SolverOptions<double> options = solver_options(spec, run);
  SolveReport report;
  report.field = spec.field;
  report.n = spec.n;
  report.m = spec.m;
  report.mode = spec.mode;
  report.part = spec.part;

  std::optional<ConstraintSystem<double>> system;
  std::optional<Objective<double>> objective;
  std::optional<ComplexProblem<double>> complex;
  if (spec.field == Field::kReal) {
    system.emplace(spec.real_system());
    if (run.reduce_rows) system.emplace(reduce_rows(*system, options.rank_tolerance));
    objective.emplace(spec.real_objective());
    report.rows_used = system->m();
  } else {
    complex.emplace(spec.complex_problem());
    if (run.reduce_rows) complex.emplace(detail::reduce_complex_rows(*complex, options.rank_tolerance));
    auto real = realify(*complex);
    system.emplace(std::move(real.system));
    objective.emplace(std::move(real.objective));
    report.rows_used = complex->m();
  }

  auto start = std::chrono::steady_clock::now();
  const Solution<double> solution = optimal_direction(*system, *objective, options);
  report.solve_ms = detail::elapsed_ms(start);
  report.status = solution.status;
  report.direction = solution.direction;
  report.raw = solution.raw;
  report.objective = solution.objective;
  if (complex) {
    const auto folded = fold_complex(std::span<const double>(solution.direction));
    report.residual_max = complex_residual(*complex, std::span<const std::complex<double>>(folded));
  } else {
    report.residual_max = system->residual(solution.direction);
  }

  if (run.check_oracle) {
    start = std::chrono::steady_clock::now();
    const Solution<double> oracle = oracle_direction(*system, *objective, options);
    report.oracle_ms = detail::elapsed_ms(start);
    report.checked = true;
    report.oracle_status = oracle.status;
    report.oracle_direction = oracle.direction;
    report.oracle_objective = oracle.objective;
    report.objective_gap = detail::relative_gap(solution.objective, oracle.objective);
    bool agree = solution.status == oracle.status && report.objective_gap <= kCheckObjectiveTolerance;
    if (solution.status != Status::kDegenerate && oracle.status != Status::kDegenerate) {
      report.cosine_agreement =
          dot(std::span<const double>(solution.direction), std::span<const double>(oracle.direction));
      agree = agree && *report.cosine_agreement >= 1 - kCheckCosineTolerance;
    }
    report.check_passed = agree;
  }
  return report;
}

namespace detail {

inline nlohmann::json vector_json(const std::vector<double>& v, Field field) {
  nlohmann::json out = nlohmann::json::array();
  if (field == Field::kReal) {
    for (double x : v) out.push_back(x);
  } else {
    for (const auto& z : fold_complex(std::span<const double>(v))) out.push_back({z.real(), z.imag()});
  }
  return out;
}

}  // namespace detail

/// Timing fields live under "timings_ms" only, so everything else is a pure
/// function of the input.
inline nlohmann::json to_json(const SolveReport& r) {
  nlohmann::json out;
  out["field"] = r.field == Field::kReal ? "real" : "complex";
  out["n"] = r.n;
  out["m"] = r.m;
  out["rows_used"] = r.rows_used;
  out["mode"] = std::string(to_string(r.mode));
  if (r.field == Field::kComplex) out["objective_part"] = std::string(to_string(r.part));
  out["status"] = std::string(to_string(r.status));
  out["direction"] = detail::vector_json(r.direction, r.field);
  out["raw"] = detail::vector_json(r.raw, r.field);
  out["objective"] = r.objective;
  out["residual_max"] = r.residual_max;
  if (r.checked) {
    nlohmann::json check;
    check["status"] = std::string(to_string(r.oracle_status));
    check["direction"] = detail::vector_json(r.oracle_direction, r.field);
    check["objective"] = r.oracle_objective;
    check["cosine_agreement"] = r.cosine_agreement ? nlohmann::json(*r.cosine_agreement) : nlohmann::json(nullptr);
    check["objective_gap"] = r.objective_gap;
    check["passed"] = r.check_passed;
    out["oracle"] = check;
  }
  out["timings_ms"] = {{"solve", r.solve_ms}, {"oracle", r.oracle_ms}};
  return out;
}

namespace detail {

inline std::string format_double(double x) {
  // Same shortest round-trip form the JSON writer uses.
  return nlohmann::json(x).dump();
}

}  // namespace detail

/// Header row plus one data row; direction components flattened as
/// x1..xn, or x1_re,x1_im,... for complex problems.
inline std::string to_csv(const SolveReport& r) {
  std::vector<std::string> header{"status", "objective", "residual_max"};
  std::vector<std::string> row{std::string(to_string(r.status)), detail::format_double(r.objective),
                               detail::format_double(r.residual_max)};
  if (r.checked) {
    header.insert(header.end(), {"oracle_status", "oracle_objective", "cosine_agreement", "check_passed"});
    row.push_back(std::string(to_string(r.oracle_status)));
    row.push_back(detail::format_double(r.oracle_objective));
    row.push_back(r.cosine_agreement ? detail::format_double(*r.cosine_agreement) : "");
    row.push_back(r.check_passed ? "true" : "false");
  }
  if (r.field == Field::kReal) {
    for (std::size_t j = 0; j < r.direction.size(); ++j) {
      header.push_back("x" + std::to_string(j + 1));
      row.push_back(detail::format_double(r.direction[j]));
    }
  } else {
    const auto folded = fold_complex(std::span<const double>(r.direction));
    for (std::size_t j = 0; j < folded.size(); ++j) {
      header.push_back("x" + std::to_string(j + 1) + "_re");
      header.push_back("x" + std::to_string(j + 1) + "_im");
      row.push_back(detail::format_double(folded[j].real()));
      row.push_back(detail::format_double(folded[j].imag()));
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
  out << '\n';
  return out.str();
}

}  // namespace hodgeopt::cli
