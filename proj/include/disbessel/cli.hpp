#pragma once

#include "disbessel/identities.hpp"
#include "disbessel/scalar.hpp"
#include "disbessel/suite.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace disbessel::cli {

enum class Command { table, verify, compare, transform, det, plot };
enum class Format { csv, svg };

/// Exit codes: 0 success / all checks pass, 1 verification or conditioning
/// failure, 2 usage or I/O error.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct RunConfig {
  Command command = Command::table;
  int j = 0;
  Precision precision = Precision::working;
  std::optional<std::filesystem::path> output_path;
  Format format = Format::csv;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> input_path;  // transform only
};

std::optional<Command> parse_command(const std::string& name);

/// Throws UsageError when the configuration violates its invariants.
void validate(const RunConfig& config);

/// Runs the configured command. Human-readable reports go to `out`, files to
/// config.output_path (stdout when absent, for single-file commands).
int run(const RunConfig& config, std::ostream& out);

int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_compare(const RunConfig& config, std::ostream& out);
int cmd_transform(const RunConfig& config, std::ostream& out);
int cmd_det(const RunConfig& config, std::ostream& out);
int cmd_plot(const RunConfig& config, std::ostream& out);

/// Identity suite with an arbitrary evaluator; cmd_verify passes the core one.
template <BesselEvaluator E>
int run_verify(const E& eval, const RunConfig& config, std::ostream& out) {
  const auto results = run_identity_suite(eval, config.seed, 100);
  int failed = 0;
  out << "verify j=" << eval.grid().j() << " seed=" << config.seed
      << " precision=" << to_string(scalar_traits<typename E::scalar_type>::precision)
      << " tuples=100\n";
  for (const CheckResult& r : results) {
    out << format_check(r) << '\n';
    if (!r.passed) ++failed;
  }
  out << "checks=" << results.size() << " failed=" << failed << '\n';
  return failed == 0 ? kOk : kFailure;
}

}  // namespace disbessel::cli
