#pragma once

#include "gaussq/sector.hpp"

namespace gaussq {

struct EstimatorConfig {
  /// Relative tolerance of the quadrature, in (0, 1e-3].
  double relative_tolerance = 1e-9;
};

/// Integral of 1/log x from 2 to u, by adaptive Gauss-Kronrod (7/15)
/// quadrature after substituting x = e^t. Throws PreconditionError for
/// u < 2 or a tolerance outside (0, 1e-3].
double log_integral_from_2(double u, const EstimatorConfig& config = {});

/// Main term of the count of Gaussian primes with |z|^2 <= u and argument in
/// the sector: (2/pi) * width * integral_2^u dx/log x.
double kubilyus_estimate(const Sector& sector, double u, const EstimatorConfig& config = {});

/// x / (2 log x), the asymptotic size of pi3(x). Throws for x <= 2.
double pi3_estimate(double x);

}  // namespace gaussq
