#pragma once

// Verification suites behind the command-line verbs. Each runner resolves
// defaults, echoes the resolved configuration into the report and returns
// one record per executed check.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glq/coherent.hpp"
#include "glq/report.hpp"

namespace glq {

/// Invalid command-line configuration (exit status 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { text, json };

struct RunConfig {
  std::vector<double> qs;  // empty: default grid {0.3, 0.5, 0.9}
  std::optional<unsigned> modes;
  std::optional<unsigned> cutoff;
  std::optional<unsigned> particles;
  std::optional<double> tol;  // overrides every tolerance of the verb
  bool exact = false;
  WeightVariant weight_variant = WeightVariant::squared_q;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  std::optional<std::string> word;
  std::vector<complex> z;
  std::vector<complex> x;
  bool inject_fault = false;
};

/// Throws ConfigError for q outside (0,1), nonpositive tolerances or zero sizes.
void validate(const RunConfig& config);

/// Parses "re" or "re:im".
complex parse_complex(const std::string& text);

Report run_verify_algebra(const RunConfig& config);
Report run_coherent_check(const RunConfig& config);
Report run_qsym_exchange(const RunConfig& config);
Report run_qsym_norm(const RunConfig& config);
Report run_qsym_identity(const RunConfig& config);
Report run_qsym_appendix(const RunConfig& config);
Report run_qexp_eval(const RunConfig& config);
Report run_jackson_moments(const RunConfig& config);

/// Exit status contract: 0 all checks pass, 1 some check failed.
int exit_status(const Report& report);

}  // namespace glq
