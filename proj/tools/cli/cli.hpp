#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaussq::cli {

enum class OutputFormat { kCsv, kJson };

struct CliConfig {
  unsigned threads = 1;
  std::uint64_t workload_budget = 200'000'000;
  std::uint64_t sieve_segment_size = std::uint64_t{1} << 26;
  OutputFormat output_format = OutputFormat::kCsv;
  double quadrature_tol = 1e-9;
};

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBudget = 2,
  kExitInternal = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussq::cli
