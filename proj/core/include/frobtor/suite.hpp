#pragma once

#include <frobtor/fiber.hpp>
#include <frobtor/root_system.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace frobtor {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::pass;
};

// Which slice of the suite to run; `all` is the verify subcommand.
enum class SuiteSelect { all, curvature, potential, wdvv };

struct RunConfig {
  Family family = Family::A;
  int rank = 1;
  cplx k{1.0, 0.0};
  cplx k_prime{0.0, 0.0};
  int points = 8;
  std::uint64_t seed = 42;
  double fd_step = 1e-5;
  double metric_scale = 1.0;  // diagnostic override of the tabulated scalar
  std::map<std::string, double> tol_overrides;
  SuiteSelect select = SuiteSelect::all;
};

struct ScalarFit {
  bool applicable = false;
  cplx value{0.0, 0.0};
  double residual = 0.0;
};

struct VerificationReport {
  std::string system;
  cplx k{0.0, 0.0}, k_prime{0.0, 0.0};
  bool degenerate = false;
  int points = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;  // lexicographic by name
  ScalarFit cubic_fit;              // best multiple of the A-type cubic sum

  bool failed() const;
  int exit_code() const;  // 0 pass, 1 fail, 2 degenerate with no failure
};

double default_tolerance(const std::string& check);

VerificationReport run_suite(const RunConfig& config);

int combined_exit_code(const std::vector<VerificationReport>& reports);

std::string format_complex(cplx v);

// Deterministic serializations; JSON carries a top-level "schema": 1.
std::string report_json(const std::vector<VerificationReport>& reports);
std::string report_text(const std::vector<VerificationReport>& reports);
std::string roots_json(const RootDatum& datum);

}  // namespace frobtor
