#include "gaussq/census.hpp"

#include <cmath>

#include "gaussq/error.hpp"
#include "gaussq/lattice.hpp"
#include "gaussq/primality.hpp"

namespace gaussq {
namespace {

// Smallest integer M with  n < M  <=>  n < rho^2  for every integer n >= 0.
std::uint64_t strict_norm_bound(double rho) {
  const long double r2 = static_cast<long double>(rho) * static_cast<long double>(rho);
  return static_cast<std::uint64_t>(std::ceil(r2));
}

// Largest integer strictly below x (x > 0).
std::uint64_t largest_below(long double x) {
  const long double c = std::ceil(x);
  return c <= 0.0L ? 0 : static_cast<std::uint64_t>(c) - 1;
}

double estimate_or_zero(const Sector& sector, double u, const EstimatorConfig& config) {
  // The integral starts at 2; below that no Gaussian prime fits either.
  return u < 2.0 ? 0.0 : kubilyus_estimate(sector, u, config);
}

}  // namespace

std::int64_t round_half_away(double value) { return std::llround(value); }

CensusResult sector_census(const Sector& sector, double rho, const CensusOptions& options) {
  if (!std::isfinite(rho) || !(rho >= 1.0)) {
    throw PreconditionError("census radius must be >= 1, got " + std::to_string(rho));
  }
  if (rho > 3.0e9) throw OverflowError("census radius exceeds the coordinate range");
  const double workload = sector.width() * rho * rho / 2.0;
  if (workload > static_cast<double>(options.workload_budget)) {
    throw BudgetError("census would scan about " + std::to_string(static_cast<std::uint64_t>(workload)) +
                      " lattice points, over the budget of " +
                      std::to_string(options.workload_budget));
  }

  CensusResult result;
  result.sector = sector;
  result.rho = rho;
  result.k = estimate_or_zero(sector, rho * rho, options.estimator);
  result.k_rounded = round_half_away(result.k);

  const std::uint64_t norm_hi = strict_norm_bound(rho);
  if (norm_hi <= 2) return result;  // smallest prime norm is 2

  const SectorWindow window(sector, 1, norm_hi);
  const unsigned threads = std::max(1U, options.threads);
  struct Tally {
    std::uint64_t n = 0;
    std::uint64_t hits = 0;
  };
  std::vector<Tally> tallies(threads);
  const bool track_hits = !sector.is_full_circle();
  for_each_strip(window, threads, [&](std::int64_t x_begin, std::int64_t x_end, unsigned slot) {
    Tally local;
    window.visit_columns(x_begin, x_end, [&](const GaussianInt& z, bool on_edge) {
      if (!is_gaussian_prime(z)) return;
      ++local.n;
      if (on_edge && track_hits &&
          (side_of_ray(sector.alpha(), z) == 0 || side_of_ray(sector.beta(), z) == 0)) {
        ++local.hits;
      }
    });
    tallies[slot].n += local.n;
    tallies[slot].hits += local.hits;
  });
  for (const Tally& t : tallies) {
    result.n += t.n;
    result.boundary_hits += t.hits;
  }
  return result;
}

std::uint64_t total_census_formula(double rho, const SieveOptions& options) {
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    throw PreconditionError("radius must be positive, got " + std::to_string(rho));
  }
  const long double r2 = static_cast<long double>(rho) * static_cast<long double>(rho);
  if (r2 > static_cast<long double>(kPi3Limit) + 1) {
    throw BudgetError("rho^2 exceeds the prime-counting limit of 10^10");
  }
  const std::uint64_t inert = count_primes_mod4(largest_below(rho), options).three;
  const std::uint64_t split = count_primes_mod4(largest_below(r2), options).one;
  const std::uint64_t ramified = r2 > 2.0L ? 1 : 0;
  return 4 * inert + 8 * split + 4 * ramified;
}

TableSpec table_spec(TableId id, CaptionMode mode) {
  TableSpec spec;
  if (id == TableId::kFig2b) {
    spec.id = "fig2b";
    spec.sector = Sector::between(Angle::from_pi_fraction(1, 31415),
                                  Angle::from_pi_fraction(2, 31415), Bounds::kClosed);
    spec.rhos = {1000, 5000, 10000, 50000, 100000, 250000, 500000};
    spec.reference_n = {0, 0, 369, 7823, 28964, 167197, 632781};
    spec.reference_k = {5, 100, 367, 7732, 28971, 167099, 631552};
    spec.note = "sector [pi/31415, 2pi/31415]";
    return spec;
  }
  spec.id = "fig2a";
  const bool printed = mode == CaptionMode::kPrintedCaption;
  spec.sector = Sector::between(Angle::from_pi_fraction(1, printed ? 24 : 47),
                                Angle::from_pi_fraction(2, 47), Bounds::kClosed);
  spec.rhos = {100, 500, 1000, 5000, 10000, 25000, 50000};
  spec.reference_n = {50, 946, 3327, 66712, 245085, 1384746, 5168740};
  spec.reference_k = {53, 940, 3346, 66651, 245200, 1385602, 5167941};
  spec.note = printed ? "sector [pi/24, 2pi/47] (printed-caption)"
                      : "sector [pi/47, 2pi/47] (derived-width)";
  return spec;
}

TableSpec custom_table(const Sector& sector, std::vector<double> rhos) {
  TableSpec spec;
  spec.id = "custom";
  spec.sector = sector;
  spec.rhos = std::move(rhos);
  spec.note = "sector " + sector.to_string();
  return spec;
}

std::vector<TableRow> census_table(const TableSpec& spec, const CensusOptions& options,
                                   OverBudget policy) {
  std::vector<TableRow> rows;
  rows.reserve(spec.rhos.size());
  for (const double rho : spec.rhos) {
    TableRow row;
    row.rho = rho;
    row.estimated_points = spec.sector.width() * rho * rho / 2.0;
    row.k = estimate_or_zero(spec.sector, rho * rho, options.estimator);
    row.k_rounded = round_half_away(row.k);
    try {
      row.census = sector_census(spec.sector, rho, options);
    } catch (const BudgetError&) {
      if (policy == OverBudget::kThrow) throw;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gaussq
