#include "gaussq/quotient.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "gaussq/error.hpp"
#include "gaussq/estimator.hpp"
#include "gaussq/lattice.hpp"
#include "gaussq/primality.hpp"

namespace gaussq {
namespace {

// Expected lattice points per norm band while searching outward.
constexpr double kPointsPerBand = 65536.0;
// Safety factor 2 over the two primes the existence argument needs.
constexpr double kRequiredGap = 4.0;

constexpr std::uint64_t kMaxNorm =
    2 * static_cast<std::uint64_t>(kCoordinateLimit) * static_cast<std::uint64_t>(kCoordinateLimit);

struct Candidate {
  std::uint64_t norm;
  double offset;  // counterclockwise angle from the sector start
  std::int64_t re;
  GaussianInt z;

  bool operator<(const Candidate& other) const {
    return std::tie(norm, offset, re) < std::tie(other.norm, other.offset, other.re);
  }
};

double offset_from(const Sector& sector, const GaussianInt& z) {
  double d = arg_of(z).radians() - sector.alpha().radians();
  if (d < 0.0) d += kTwoPi;
  return d;
}

double pi3_gap(double threshold, double r, double big_r) {
  return pi3_estimate(threshold / r) - pi3_estimate(threshold / big_r);
}

// Smallest-ish M with pi3_estimate(M/r) - pi3_estimate(M/R) >= kRequiredGap.
double initial_threshold(double r, double big_r) {
  double hi = 3.0 * big_r;  // keeps both arguments above 2
  while (pi3_gap(hi, r, big_r) < kRequiredGap) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw BudgetError("no usable magnitude threshold");
  }
  double lo = std::max(3.0 * big_r, hi / 2.0);
  if (lo >= hi || pi3_gap(lo, r, big_r) >= kRequiredGap) return lo < hi ? lo : hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (pi3_gap(mid, r, big_r) >= kRequiredGap ? hi : lo) = mid;
  }
  return hi;
}

std::string describe(const SearchTrace& trace) {
  return "after " + std::to_string(trace.iterations) + " rounds, threshold M=" +
         std::to_string(trace.threshold);
}

}  // namespace

std::optional<GaussianInt> find_prime_in_sector(const Sector& sector, std::uint64_t min_norm,
                                                std::uint64_t max_norm,
                                                const QuotientOptions& options) {
  if (min_norm >= max_norm) throw PreconditionError("find_prime_in_sector needs min_norm < max_norm");
  if (max_norm > kMaxNorm + 1) throw OverflowError("norm window exceeds the coordinate range");
  const Sector open = sector.with_bounds(Bounds::kOpen);
  const unsigned threads = std::max(1U, options.threads);

  const double band_norms = std::max(64.0, kPointsPerBand / (open.width() / 2.0));
  double scanned = 0.0;
  std::uint64_t lo = std::max<std::uint64_t>(min_norm, 1);
  while (lo < max_norm) {
    const std::uint64_t span = static_cast<std::uint64_t>(
        std::min(band_norms, static_cast<double>(max_norm - lo)));
    const std::uint64_t hi = lo + std::max<std::uint64_t>(span, 1);
    const SectorWindow window(open, lo, hi);
    scanned += window.estimated_points();
    if (scanned > static_cast<double>(options.workload_budget)) {
      throw BudgetError("prime search would scan about " +
                        std::to_string(static_cast<std::uint64_t>(scanned)) +
                        " lattice points, over the budget of " +
                        std::to_string(options.workload_budget));
    }

    std::vector<std::optional<Candidate>> best(threads);
    for_each_strip(window, threads, [&](std::int64_t x_begin, std::int64_t x_end, unsigned slot) {
      std::optional<Candidate> local;
      window.visit_columns(x_begin, x_end, [&](const GaussianInt& z, bool) {
        const std::uint64_t n = norm(z);
        if (local && n > local->norm) return;
        if (!is_gaussian_prime(z)) return;
        const Candidate c{n, offset_from(open, z), z.re(), z};
        if (!local || c < *local) local = c;
      });
      if (local && (!best[slot] || *local < *best[slot])) best[slot] = local;
    });

    std::optional<Candidate> winner;
    for (const auto& b : best) {
      if (b && (!winner || *b < *winner)) winner = b;
    }
    if (winner) return winner->z;
    lo = hi;
  }
  return std::nullopt;
}

QuotientResult find_quotient(const AnnularRegion& region, const QuotientOptions& options) {
  if (!(options.growth > 1.0)) throw PreconditionError("growth factor must exceed 1");
  const double r = region.r();
  const double big_r = region.big_r();
  const Sector& sector = region.sector();

  SearchTrace trace;
  double threshold = initial_threshold(r, big_r);
  for (int round = 0; round < options.max_iterations; ++round) {
    trace.iterations = round + 1;
    trace.threshold = threshold;
    const long double m2 = static_cast<long double>(threshold) * threshold;
    const long double top = m2 * options.growth;
    if (top > static_cast<long double>(kMaxNorm)) {
      throw BudgetError("quotient search reached the coordinate range " + describe(trace));
    }
    const auto min_norm = static_cast<std::uint64_t>(std::ceil(m2));
    const auto max_norm = std::max(min_norm + 1, static_cast<std::uint64_t>(std::ceil(top)));

    if (const auto gamma = find_prime_in_sector(sector, min_norm, max_norm, options)) {
      const double modulus = std::sqrt(static_cast<double>(norm(*gamma)));
      const double q_hi = modulus / r;
      double q_lo = modulus / big_r;
      while (q_lo < q_hi) {
        const auto q = prime_3mod4_in(q_lo, q_hi, options.sieve);
        if (!q) break;
        const RationalComplex value(*gamma, *q);
        if (region_contains(region, value)) {
          QuotientResult result{*gamma, *q, value, region, trace};
          if (!verify_quotient(result)) {
            throw InternalError("quotient " + to_string(*gamma) + " / " + std::to_string(*q) +
                                " failed re-verification");
          }
          return result;
        }
        // Rounding put q just outside; keep looking above it.
        q_lo = static_cast<double>(*q);
      }
    }
    threshold *= options.growth;
  }
  throw BudgetError("quotient search hit the iteration cap " + describe(trace));
}

AnnularRegion approximation_region(double re, double im, double eps) {
  if (!std::isfinite(re) || !std::isfinite(im)) throw PreconditionError("target must be finite");
  if (!std::isfinite(eps) || !(eps > 0.0)) {
    throw PreconditionError("eps must be positive, got " + std::to_string(eps));
  }
  const double modulus = std::hypot(re, im);
  if (modulus <= eps / 2.0) {
    // Every point of modulus < eps/2 is within eps of z.
    return AnnularRegion(Sector(Angle::from_pi_fraction(0, 1), kPi / 2.0, Bounds::kOpen),
                         eps / 4.0, eps / 2.0);
  }
  const double half_angle = eps / (4.0 * (modulus + eps));
  const double center = std::atan2(im, re);
  const Sector sector(Angle::from_radians(center - half_angle), 2.0 * half_angle, Bounds::kOpen);
  return AnnularRegion(sector, modulus - eps / 2.0, modulus + eps / 2.0);
}

QuotientResult approximate(double re, double im, double eps, const QuotientOptions& options) {
  const AnnularRegion region = approximation_region(re, im, eps);
  QuotientResult result = find_quotient(region, options);
  if (!within_distance(result.value, re, im, eps)) {
    throw InternalError("quotient " + to_string(result.gamma) + " / " + std::to_string(result.q) +
                        " is not within eps of the target");
  }
  return result;
}

bool verify_quotient(const QuotientResult& result) {
  try {
    if (!classify(result.gamma).is_prime()) return false;
    if (result.q % 4 != 3 || !is_prime(result.q)) return false;
    if (!(result.value == RationalComplex(result.gamma, result.q))) return false;
    return region_contains(result.region, result.value);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace gaussq
