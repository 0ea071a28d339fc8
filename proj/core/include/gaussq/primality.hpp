#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gaussq/gaussian.hpp"

namespace gaussq {

/// Deterministic primality for every 64-bit input (Miller-Rabin with a
/// witness set proven sufficient below 2^64).
bool is_prime(std::uint64_t n);

enum class PrimeTag { kZero, kUnit, kRamified, kInert, kSplit, kComposite };

std::string_view to_string(PrimeTag tag);

/// Outcome of classifying a Gaussian integer.
///
/// For the three prime tags `rational_prime` is the rational prime below the
/// point (the norm for split/ramified, |coordinate| for inert). For
/// composites `divisor` is a nontrivial Gaussian divisor when one was found.
struct PrimeClass {
  PrimeTag tag = PrimeTag::kZero;
  std::optional<std::uint64_t> rational_prime;
  std::optional<GaussianInt> divisor;

  bool is_prime() const {
    return tag == PrimeTag::kRamified || tag == PrimeTag::kInert || tag == PrimeTag::kSplit;
  }
  friend bool operator==(const PrimeClass&, const PrimeClass&) = default;
};

PrimeClass classify(const GaussianInt& z);

bool is_gaussian_prime(const GaussianInt& z);

/// Largest norm trial_divide_zi accepts.
inline constexpr std::uint64_t kTrialDivisionNormLimit = 100'000'000;

/// Independent classifier: searches for a Gaussian divisor d with
/// 1 < N(d) <= sqrt(N(z)) by exact division, never consulting is_prime.
/// Throws BudgetError above kTrialDivisionNormLimit.
PrimeClass trial_divide_zi(const GaussianInt& z);

}  // namespace gaussq
