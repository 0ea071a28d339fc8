#include <gtest/gtest.h>

#include <random>

#include "gaussq/error.hpp"
#include "gaussq/primality.hpp"

namespace gaussq {
namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(IsPrime, SmallValuesMatchTrialDivision) {
  for (std::uint64_t n = 0; n < 200000; ++n) ASSERT_EQ(is_prime(n), naive_prime(n)) << n;
}

TEST(IsPrime, KnownValues) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(100000007));
  EXPECT_FALSE(is_prime(100140053));  // 10007^2 + 4
  EXPECT_TRUE(is_prime(4294967291ULL));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
  // strong pseudoprimes to several small bases
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(3825123056546413051ULL));
  EXPECT_FALSE(is_prime(4759123141ULL));
  EXPECT_FALSE(is_prime(1122004669633ULL));
}

TEST(IsPrime, RandomAgainstTrialDivision) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint64_t> d(1ULL << 32, 1ULL << 40);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = d(rng) | 1;
    ASSERT_EQ(is_prime(n), naive_prime(n)) << n;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({3, 0}).tag, PrimeTag::kInert);
  EXPECT_EQ(classify({3, 0}).rational_prime, 3u);
  EXPECT_EQ(classify({2, 1}).tag, PrimeTag::kSplit);
  EXPECT_EQ(classify({2, 1}).rational_prime, 5u);
  EXPECT_EQ(classify({1, 1}).tag, PrimeTag::kRamified);
  const PrimeClass two = classify({2, 0});
  EXPECT_EQ(two.tag, PrimeTag::kComposite);
  ASSERT_TRUE(two.divisor);
  EXPECT_EQ(norm(*two.divisor), 2u);
  EXPECT_EQ(classify({0, 0}).tag, PrimeTag::kZero);
  EXPECT_EQ(classify({0, -1}).tag, PrimeTag::kUnit);
  EXPECT_EQ(to_string(PrimeTag::kSplit), "split");
}

TEST(Classify, GaussianPrimePredicate) {
  EXPECT_TRUE(is_gaussian_prime({0, 7}));
  EXPECT_FALSE(is_gaussian_prime({5, 0}));
  EXPECT_FALSE(is_gaussian_prime({10007, 2}));
  EXPECT_TRUE(is_gaussian_prime({-1, -1}));
  EXPECT_FALSE(is_gaussian_prime({0, 0}));
  EXPECT_FALSE(is_gaussian_prime({1, 0}));
}

TEST(Classify, CompositeWitnessDivides) {
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t b = -60; b <= 60; ++b) {
      const GaussianInt z(a, b);
      const PrimeClass c = classify(z);
      if (c.tag != PrimeTag::kComposite) continue;
      ASSERT_TRUE(c.divisor);
      EXPECT_GT(norm(*c.divisor), 1u);
      EXPECT_LT(norm(*c.divisor), norm(z));
      EXPECT_TRUE(divides(*c.divisor, z)) << to_string(z);
    }
  }
}

TEST(Classify, InvariantUnderSymmetry) {
  for (std::int64_t a = 0; a <= 80; ++a) {
    for (std::int64_t b = 0; b <= 80; ++b) {
      if (a == 0 && b == 0) continue;
      const PrimeTag tag = classify({a, b}).tag;
      for (const auto& w : symmetry_orbit({a, b})) EXPECT_EQ(classify(w).tag, tag);
    }
  }
}

TEST(TrialDivision, Examples) {
  const PrimeClass two = trial_divide_zi({2, 0});
  EXPECT_EQ(two.tag, PrimeTag::kComposite);
  EXPECT_EQ(two.divisor, GaussianInt(1, 1));
  EXPECT_EQ(trial_divide_zi({3, 0}).tag, PrimeTag::kInert);
  EXPECT_EQ(trial_divide_zi({2, 1}).tag, PrimeTag::kSplit);
  EXPECT_THROW(trial_divide_zi({10001, 10001}), BudgetError);
}

TEST(TrialDivision, AgreesWithClassifyOnSmallNorms) {
  for (std::int64_t a = -100; a <= 100; ++a) {
    for (std::int64_t b = -100; b <= 100; ++b) {
      const GaussianInt z(a, b);
      if (norm(z) > 10000) continue;
      EXPECT_EQ(classify(z).tag, trial_divide_zi(z).tag) << to_string(z);
    }
  }
}

}  // namespace
}  // namespace gaussq
