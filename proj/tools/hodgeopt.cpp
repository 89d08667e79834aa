// hodgeopt: optimal unit direction for B . x subject to [A] x = 0.
//
// Exit codes: 0 success (degenerate included), 1 parse/validation failure,
// 2 numerical failure (rank deficiency, oracle disagreement under --check,
// failed self-test).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hodgeopt/cli/problem_spec.hpp"
#include "hodgeopt/cli/run_solve.hpp"
#include "hodgeopt/cli/self_test.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

constexpr const char* kMaxDimEnv = "HODGEOPT_MAX_DIM";

int fail(const std::string& kind, const std::string& message, int code) {
  nlohmann::json err;
  err["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  std::cout << err.dump(2) << '\n';
  std::cerr << "hodgeopt: " << message << '\n';
  return code;
}

int max_dimension_from_env() {
  const char* raw = std::getenv(kMaxDimEnv);
  if (raw == nullptr || *raw == '\0') return hodgeopt::kDefaultMaxDimension;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > hodgeopt::kMaxMaskDimension) {
    throw hodgeopt::cli::ValidationError(std::string(kMaxDimEnv) + " must be an integer in [1, " +
                                         std::to_string(hodgeopt::kMaxMaskDimension) + "]");
  }
  return static_cast<int>(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal unit direction for B.x under homogeneous linear constraints"};
  std::string input;
  bool check = false;
  bool reduce = false;
  std::optional<double> tolerance;
  std::vector<long long> self_test_args;
  std::string format = "json";

  app.add_option("--input", input, "Problem file (JSON)");
  app.add_flag("--check", check, "Cross-validate against the Gram-Schmidt oracle");
  app.add_flag("--reduce-rows", reduce, "Drop linearly dependent constraint rows before solving");
  app.add_option("--tolerance", tolerance, "Override the relative degeneracy tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--self-test", self_test_args, "Randomized self-test: n m trials seed")
      ->expected(4)
      ->type_name("N M TRIALS SEED");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (input.empty() == self_test_args.empty()) {
    return fail("Usage", "exactly one of --input or --self-test is required", kExitValidation);
  }

  try {
    const int max_dimension = max_dimension_from_env();

    if (!self_test_args.empty()) {
      if (self_test_args[0] < 0 || self_test_args[1] < 0 || self_test_args[2] < 0 || self_test_args[3] < 0) {
        return fail("Validation", "self-test arguments must be non-negative", kExitValidation);
      }
      const auto report = hodgeopt::cli::self_test(
          static_cast<int>(self_test_args[0]), static_cast<int>(self_test_args[1]),
          static_cast<int>(self_test_args[2]), static_cast<std::uint64_t>(self_test_args[3]), max_dimension);
      const nlohmann::json out = hodgeopt::cli::to_json(report);
      if (format == "csv") {
        std::cout << "n,m,trials,seed,failures,max_residual,min_cosine,max_objective_gap,passed\n"
                  << report.n << ',' << report.m << ',' << report.trials << ',' << report.seed << ','
                  << report.failures << ',' << out["max_residual"].dump() << ',' << out["min_cosine"].dump() << ','
                  << out["max_objective_gap"].dump() << ',' << (report.passed ? "true" : "false") << '\n';
      } else {
        std::cout << out.dump(2) << '\n';
      }
      return report.passed ? kExitOk : kExitNumerical;
    }

    const hodgeopt::cli::ProblemSpec spec = hodgeopt::cli::parse_problem(input);
    hodgeopt::cli::RunOptions run;
    run.check_oracle = check;
    run.reduce_rows = reduce;
    run.degeneracy_tolerance = tolerance;
    run.max_dimension = max_dimension;
    const hodgeopt::cli::SolveReport report = hodgeopt::cli::run_solve(spec, run);
    if (format == "csv") {
      std::cout << hodgeopt::cli::to_csv(report);
    } else {
      std::cout << hodgeopt::cli::to_json(report).dump(2) << '\n';
    }
    if (!report.check_passed) {
      std::cerr << "hodgeopt: solver and oracle disagree\n";
      return kExitNumerical;
    }
    return kExitOk;
  } catch (const hodgeopt::cli::ParseError& e) {
    return fail("ParseError", e.what(), kExitValidation);
  } catch (const hodgeopt::cli::ValidationError& e) {
    return fail("ValidationError", e.what(), kExitValidation);
  } catch (const hodgeopt::DomainError& e) {
    return fail("ValidationError", e.what(), kExitValidation);
  } catch (const hodgeopt::RankDeficientError& e) {
    return fail("RankDeficient", std::string(e.what()) + " (retry with --reduce-rows)", kExitNumerical);
  } catch (const std::exception& e) {
    return fail("NumericalError", e.what(), kExitNumerical);
  }
}
