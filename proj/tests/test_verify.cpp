#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treepark/verify.hpp"

using namespace treepark;

TEST(Census, SmallRows) {
  const auto r1 = census(1);
  EXPECT_TRUE(r1.passed());
  EXPECT_EQ(r1.counts.parking, 1u);
  EXPECT_EQ(r1.counts.prime, 1u);
  EXPECT_EQ(r1.counts.distributions, 1u);
  EXPECT_EQ(r1.counts.marked, 1u);
  EXPECT_EQ(r1.srp, 1u);

  const auto r3 = census(3);
  EXPECT_TRUE(r3.passed());
  EXPECT_EQ(r3.counts.parking, 132u);
  EXPECT_EQ(r3.counts.prime, 24u);
  EXPECT_EQ(r3.counts.prime_distributions, 12u);
  EXPECT_EQ(r3.counts.distributions, 39u);
  EXPECT_EQ(r3.srp, 4u);
  EXPECT_EQ(r3.counts.checked_by_simulation, 9u * 27u);
}

TEST(Census, MatchesNaiveOracleAtFour) {
  std::uint64_t parking = 0;
  std::uint64_t prime = 0;
  for (const auto& parents : oracle::all_trees(4)) {
    for (const auto& s : oracle::all_sequences(4)) {
      parking += oracle::parks(parents, s);
      prime += oracle::prime(parents, s);
    }
  }
  const auto r = census(4);
  EXPECT_EQ(r.counts.parking, parking);
  EXPECT_EQ(r.counts.prime, prime);
  EXPECT_EQ(parking, oracle::parking_count(4));
}

TEST(Census, ShardStable) {
  const auto serial = census_shard(4, 0, rooted_tree_count(4), false);
  CensusCounts summed;
  for (std::uint64_t k = 0; k < 64; k += 10) summed += census_shard(4, k, k + 10, false);
  EXPECT_EQ(summed.parking, serial.parking);
  EXPECT_EQ(summed.prime, serial.prime);
  EXPECT_EQ(summed.distributions, serial.distributions);
  EXPECT_EQ(summed.prime_distributions, serial.prime_distributions);
  EXPECT_EQ(summed.marked, serial.marked);
  EXPECT_EQ(summed.marked_prime, serial.marked_prime);

  const auto threaded = census(4, {.threads = 3});
  EXPECT_EQ(threaded.counts.parking, serial.parking);
  EXPECT_EQ(threaded.counts.marked_prime, serial.marked_prime);
}

TEST(Census, Limits) {
  EXPECT_THROW(census(6), error);
  EXPECT_THROW(census(7, {.allow_large = true}), error);
  EXPECT_THROW(census(0), error);
  try {
    census(6);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::limit_exceeded);
  }
}

TEST(Suites, RoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = roundtrip_suite(n);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.checked, 2 * oracle::factorial(2 * n - 2));
  }
  EXPECT_THROW(roundtrip_suite(5), error);
}

TEST(Suites, Theorem) {
  const auto c = oracle::catalan(6);
  for (int n = 1; n <= 6; ++n) {
    const auto r = theorem53_suite(n);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.checked, c[n]);
  }
  EXPECT_THROW(theorem53_suite(8), error);
}

TEST(Suites, PathPreimages) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = path_preimage_suite(n);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.checked, oracle::factorial(n));
  }
}

TEST(Suites, Srp) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = srp_suite(n);
    EXPECT_TRUE(r.passed) << r.detail;
  }
  EXPECT_EQ(count_srp(4), 30u);
}

TEST(Suites, Properties) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = property_suite_exhaustive(n);
    EXPECT_TRUE(r.passed) << r.detail;
  }
  const auto r = property_suite_random(6, 500, 7);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.checked, 1000u);
}

TEST(Suites, FailureNamesCounterexample) {
  SuiteReport r{"x", 1};
  r.fail("first");
  r.fail("second");
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.detail, "first");
}
