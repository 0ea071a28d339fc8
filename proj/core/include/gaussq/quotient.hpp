#pragma once

#include <cstdint>
#include <optional>

#include "gaussq/census.hpp"
#include "gaussq/sector.hpp"
#include "gaussq/sieve.hpp"

namespace gaussq {

struct QuotientOptions {
  unsigned threads = 1;
  /// Cap on lattice points scanned by a single find_prime_in_sector call.
  std::uint64_t workload_budget = kDefaultWorkloadBudget;
  /// Retry rounds before giving up with a BudgetError.
  int max_iterations = 40;
  /// Norm window [M^2, growth * M^2); M is multiplied by growth per retry.
  double growth = 2.0;
  SieveOptions sieve;
};

struct SearchTrace {
  int iterations = 0;
  /// Magnitude threshold M of the last round.
  double threshold = 0.0;
};

/// A Gaussian-prime quotient gamma / q found inside a requested region.
struct QuotientResult {
  GaussianInt gamma;
  std::uint64_t q;
  RationalComplex value;
  AnnularRegion region;
  SearchTrace trace;
};

/// The Gaussian prime with min_norm <= N(z) < max_norm and arg strictly
/// inside the sector that has the least norm; ties go to the smaller
/// counterclockwise offset from the sector start, then the smaller real part.
/// Throws BudgetError when the scan would exceed the workload budget.
std::optional<GaussianInt> find_prime_in_sector(const Sector& sector, std::uint64_t min_norm,
                                                std::uint64_t max_norm,
                                                const QuotientOptions& options = {});

/// Gaussian prime gamma and rational prime q = 3 (mod 4) with gamma / q in
/// the region. Since q is a positive real, gamma / q has the argument of
/// gamma, and its modulus lands in (r, R) exactly when |gamma|/R < q <
/// |gamma|/r. The magnitude threshold grows until both exist.
///
/// Throws BudgetError (carrying the trace in its message) when the
/// iteration cap or the coordinate range is reached.
QuotientResult find_quotient(const AnnularRegion& region, const QuotientOptions& options = {});

/// Region inside the open disk of radius eps about z that approximate()
/// searches. Throws PreconditionError unless eps > 0 and z is finite.
AnnularRegion approximation_region(double re, double im, double eps);

/// A quotient of Gaussian primes within eps of re + im i.
QuotientResult approximate(double re, double im, double eps, const QuotientOptions& options = {});

/// Re-derives every invariant of a result from scratch: gamma is a Gaussian
/// prime, q is a rational prime = 3 (mod 4), value == gamma / q and the
/// region contains it.
bool verify_quotient(const QuotientResult& result);

}  // namespace gaussq
