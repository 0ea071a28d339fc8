#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussq/estimator.hpp"
#include "gaussq/sector.hpp"
#include "gaussq/sieve.hpp"

namespace gaussq {

inline constexpr std::uint64_t kDefaultWorkloadBudget = 200'000'000;

struct CensusOptions {
  unsigned threads = 1;
  /// Cap on the estimated number of lattice points scanned.
  std::uint64_t workload_budget = kDefaultWorkloadBudget;
  EstimatorConfig estimator;
};

/// Observed and predicted number of Gaussian primes with |z| < rho in a
/// sector.
struct CensusResult {
  Sector sector = Sector::full_circle();
  double rho = 0.0;
  std::uint64_t n = 0;
  double k = 0.0;
  std::int64_t k_rounded = 0;
  /// Primes counted in n that lie exactly on a bounding ray.
  std::uint64_t boundary_hits = 0;
};

/// Nearest integer, halves away from zero.
std::int64_t round_half_away(double value);

/// Exact count of Gaussian primes z with |z| < rho and arg z in the sector
/// (bounds as the sector says), plus the estimator at u = rho^2.
/// Throws BudgetError when width * rho^2 / 2 exceeds the workload budget
/// and PreconditionError unless rho >= 1.
CensusResult sector_census(const Sector& sector, double rho, const CensusOptions& options = {});

/// Full-circle count predicted from rational primes:
/// 4 #{p = 3 (mod 4), p < rho} + 8 #{p = 1 (mod 4), p < rho^2} + 4 [rho^2 > 2].
std::uint64_t total_census_formula(double rho, const SieveOptions& options = {});

enum class TableId { kFig2a, kFig2b };

/// Which sector the fig2a table uses: [pi/47, 2pi/47] reproduces the
/// published estimator column; [pi/24, 2pi/47] is the bound pair as printed.
enum class CaptionMode { kDerivedWidth, kPrintedCaption };

struct TableSpec {
  std::string id;
  Sector sector = Sector::full_circle();
  std::vector<double> rhos;
  /// Published N and rounded K per row, when the table is a known one.
  std::vector<std::uint64_t> reference_n;
  std::vector<std::int64_t> reference_k;
  std::string note;
};

TableSpec table_spec(TableId id, CaptionMode mode = CaptionMode::kDerivedWidth);
TableSpec custom_table(const Sector& sector, std::vector<double> rhos);

struct TableRow {
  double rho = 0.0;
  /// Absent when the row exceeded the workload budget and was skipped.
  std::optional<CensusResult> census;
  double k = 0.0;
  std::int64_t k_rounded = 0;
  double estimated_points = 0.0;
};

enum class OverBudget { kThrow, kSkip };

std::vector<TableRow> census_table(const TableSpec& spec, const CensusOptions& options = {},
                                   OverBudget policy = OverBudget::kThrow);

}  // namespace gaussq
