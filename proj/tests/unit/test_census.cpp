#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussq/census.hpp"
#include "gaussq/error.hpp"
#include "gaussq/primality.hpp"

namespace gaussq {
namespace {

Sector closed(const char* a, const char* b) {
  return Sector::between(parse_angle_literal(a), parse_angle_literal(b), Bounds::kClosed);
}

// Counts by visiting every lattice point of the disc.
std::uint64_t brute_census(const Sector& s, double rho) {
  const auto bound = static_cast<std::int64_t>(std::ceil(rho));
  std::uint64_t n = 0;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      const GaussianInt z(a, b);
      if (z.is_zero() || static_cast<double>(norm(z)) >= rho * rho) continue;
      if (is_gaussian_prime(z) && sector_contains(s, z)) ++n;
    }
  }
  return n;
}

TEST(Census, Examples) {
  EXPECT_EQ(sector_census(closed("0", "pi/3"), 1.0).n, 0u);
  EXPECT_EQ(sector_census(closed("0", "2pi"), 2.0).n, 4u);
  const CensusResult r = sector_census(closed("pi/31415", "2pi/31415"), 1e4);
  EXPECT_EQ(r.n, 369u);
  EXPECT_EQ(r.k_rounded, 367);
  EXPECT_EQ(r.boundary_hits, 0u);
  EXPECT_EQ(sector_census(closed("pi/31415", "2pi/31415"), 5e4, {.threads = 4}).n, 7823u);
  EXPECT_THROW(sector_census(closed("0", "pi"), 0.5), PreconditionError);
}

TEST(Census, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> width(0.01, kTwoPi);
  std::uniform_real_distribution<double> radius(1.0, 150.0);
  for (int i = 0; i < 60; ++i) {
    const Sector s(Angle::from_radians(angle(rng)), width(rng), i % 3 ? Bounds::kClosed : Bounds::kOpen);
    const double rho = radius(rng);
    EXPECT_EQ(sector_census(s, rho, {.threads = 1 + static_cast<unsigned>(i % 4)}).n, brute_census(s, rho)) << s.to_string() << ' ' << rho;
  }
  for (const char* a : {"0", "pi/4", "pi/2", "3pi/4", "pi", "7pi/4"}) {
    for (const char* b : {"pi/4", "pi/2", "5pi/4", "2pi"}) {
      if (std::string(a) == b) continue;
      const Sector s = closed(a, b);
      EXPECT_EQ(sector_census(s, 97.5).n, brute_census(s, 97.5)) << s.to_string();
      EXPECT_EQ(sector_census(s.with_bounds(Bounds::kOpen), 97.5).n,
                brute_census(s.with_bounds(Bounds::kOpen), 97.5))
          << s.to_string();
    }
  }
}

TEST(Census, BoundaryHitsOnAxes) {
  // inert primes on the positive real axis: 3, 7, 11, 19
  const CensusResult r = sector_census(closed("0", "pi/6"), 20.0);
  EXPECT_EQ(r.boundary_hits, 4u);
  EXPECT_EQ(sector_census(closed("0", "pi/6").with_bounds(Bounds::kOpen), 20.0).n + 4, r.n);
}

TEST(Census, Additivity) {
  const Sector left = closed("pi/7", "0.9");
  const Sector right = closed("0.9", "2pi/5");
  const Sector both = closed("pi/7", "2pi/5");
  for (const double rho : {50.0, 400.0, 1500.0}) {
    EXPECT_EQ(sector_census(left, rho).n + sector_census(right, rho).n, sector_census(both, rho).n);
  }
}

TEST(Census, QuarterSymmetry) {
  const Sector s = closed("pi/31", "0.5");
  for (const double rho : {100.0, 2000.0}) {
    const auto n = sector_census(s, rho).n;
    for (int k = 1; k < 4; ++k) EXPECT_EQ(sector_census(s.rotated_quarter(k), rho).n, n);
  }
}

TEST(Census, FullCircleFormula) {
  EXPECT_EQ(total_census_formula(2), 4u);
  EXPECT_EQ(total_census_formula(4), 24u);
  EXPECT_EQ(total_census_formula(10), 100u);
  const Sector full = closed("0", "2pi");
  for (double rho = 1.0; rho <= 1000.0; rho = rho < 60 ? rho + 1.0 : rho * 1.31) {
    EXPECT_EQ(sector_census(full, rho, {.threads = 2}).n, total_census_formula(rho)) << rho;
  }
}

TEST(Census, MonotoneInRho) {
  const Sector s = closed("pi/47", "2pi/47");
  std::uint64_t last_n = 0;
  double last_k = 0.0;
  for (double rho = 1.0; rho < 3000.0; rho *= 1.5) {
    const CensusResult r = sector_census(s, rho);
    EXPECT_GE(r.n, last_n);
    EXPECT_GE(r.k, last_k);
    last_n = r.n;
    last_k = r.k;
  }
}

TEST(Census, ThreadCountDoesNotChangeResult) {
  const Sector s = closed("0.3", "1.4");
  const auto ref = sector_census(s, 3000.0, {.threads = 1});
  for (unsigned t : {2u, 3u, 8u, 13u}) {
    const auto r = sector_census(s, 3000.0, {.threads = t});
    EXPECT_EQ(r.n, ref.n);
    EXPECT_EQ(r.k, ref.k);
    EXPECT_EQ(r.boundary_hits, ref.boundary_hits);
  }
}

TEST(Census, BudgetGuard) {
  EXPECT_THROW(sector_census(closed("0", "pi/2"), 1e7), BudgetError);
  EXPECT_THROW(sector_census(closed("0", "pi/2"), 1000.0, {.workload_budget = 1000}), BudgetError);
}

TEST(Census, RoundHalfAway) {
  EXPECT_EQ(round_half_away(2.5), 3);
  EXPECT_EQ(round_half_away(-2.5), -3);
  EXPECT_EQ(round_half_away(2.4999), 2);
}

TEST(CensusTable, SpecsAndSkipping) {
  const TableSpec b = table_spec(TableId::kFig2b);
  EXPECT_EQ(b.rhos.size(), 7u);
  EXPECT_EQ(b.sector.to_string(), "[pi/31415, 2pi/31415]");
  EXPECT_EQ(table_spec(TableId::kFig2a).sector.to_string(), "[pi/47, 2pi/47]");
  EXPECT_EQ(table_spec(TableId::kFig2a, CaptionMode::kPrintedCaption).sector.to_string(), "[pi/24, 2pi/47]");

  const TableSpec spec = custom_table(closed("0", "pi/2"), {10.0, 1e6});
  const auto rows = census_table(spec, {.workload_budget = 100000}, OverBudget::kSkip);
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_TRUE(rows[0].census);
  EXPECT_FALSE(rows[1].census);
  EXPECT_GT(rows[1].k, 0.0);
  EXPECT_THROW(census_table(spec, {.workload_budget = 100000}, OverBudget::kThrow), BudgetError);
}

}  // namespace
}  // namespace gaussq
