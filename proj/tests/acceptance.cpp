// Acceptance checks: one PASS/FAIL line per criterion. Counts are exact;
// the only tolerances are the wall-time limits below.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treepark/treepark.hpp"

using namespace treepark;

namespace {

constexpr double census_limit_s = 30.0;
constexpr double distribution_limit_s = 10.0;
constexpr double roundtrip_limit_s = 5.0;
constexpr double series_limit_s = 1.0;
constexpr int series_order = 12;
constexpr std::uint64_t random_samples = 10000;
constexpr std::uint64_t random_seed = 20240601;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect_eq(const BigInt& got, const BigInt& want, const std::string& what) {
    if (got != want) fail(what + ": got " + got.str() + ", expected " + want.str());
  }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v, double seconds) {
  std::ostringstream line;
  line << (v.pass ? "PASS" : "FAIL") << " C" << id << ' ' << title << " [" << std::fixed;
  line.precision(3);
  line << seconds << " s]";
  if (!v.detail.empty()) line << " -- " << v.detail;
  std::cout << line.str() << std::endl;
  failures += !v.pass;
}

}  // namespace

int main() {
  const CountTable expected = closed_counts(5);
  const auto& rows = expected.rows;

  // One single-threaded enumeration serves criteria 1 to 5.
  std::vector<CensusCounts> counted(6);
  const auto census_start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) counted[n] = census_shard(n, 0, rooted_tree_count(n), false);
  const double census_s = seconds_since(census_start);

  {
    Verdict v;
    const std::vector<long long> literal{1, 6, 132, 6384, 544320};
    for (int n = 1; n <= 5; ++n) {
      v.expect_eq(counted[n].parking, rows[n - 1].F, "F_" + std::to_string(n));
      v.expect_eq(counted[n].parking, literal[n - 1], "F_" + std::to_string(n) + " literal");
    }
    if (census_s >= census_limit_s) v.fail("census took " + std::to_string(census_s) + " s");
    report(1, "census n=1..5: parking functions equal the closed form", v, census_s);
  }
  {
    Verdict v;
    const std::vector<long long> literal{1, 2, 24, 720, 40320};
    for (int n = 1; n <= 5; ++n) {
      v.expect_eq(counted[n].prime, factorial(2 * n - 2), "P_" + std::to_string(n));
      v.expect_eq(counted[n].prime, literal[n - 1], "P_" + std::to_string(n) + " literal");
    }
    if (census_s >= census_limit_s) v.fail("census took " + std::to_string(census_s) + " s");
    report(2, "census n=1..5: prime parking functions equal (2n-2)!", v, census_s);
  }
  {
    Verdict v;
    const std::vector<long long> literal{1, 2, 12, 132, 2160};
    const auto s = large_schroder_numbers(4);
    for (int n = 1; n <= 5; ++n) {
      v.expect_eq(counted[n].prime_distributions, factorial(n - 1) * s[n - 1], "P~_" + std::to_string(n));
      v.expect_eq(counted[n].prime_distributions, literal[n - 1], "P~_" + std::to_string(n) + " literal");
    }
    if (census_s >= distribution_limit_s) v.fail("census took " + std::to_string(census_s) + " s");
    report(3, "census n=1..5: prime parking distributions equal (n-1)! S_{n-1}", v, census_s);
  }
  {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const Series ftilde = Ftilde_series(5);
    for (int n = 1; n <= 5; ++n) {
      const Rational scaled = ftilde[n] * Rational(factorial(n));
      if (scaled != Rational(counted[n].distributions)) {
        v.fail("F~_" + std::to_string(n) + ": ODE gives " + scaled.str() + ", census " +
               std::to_string(counted[n].distributions));
      }
    }
    v.expect_eq(counted[1].distributions, 1, "F~_1");
    v.expect_eq(counted[2].distributions, 4, "F~_2");
    report(4, "distribution ODE coefficients equal the distribution census for n <= 5", v, seconds_since(start));
  }
  {
    Verdict v;
    for (int n = 2; n <= 5; ++n) {
      const std::string k = std::to_string(n);
      v.expect_eq(counted[n].marked_prime, BigInt(n * (n - 1)) * counted[n - 1].prime_distributions, "P*_" + k);
      v.expect_eq(counted[n].marked, BigInt(2 * n * (n - 1)) * counted[n - 1].distributions, "F*_" + k);
      v.expect_eq(counted[n].marked_prime, rows[n - 1].Pstar, "P*_" + k + " series");
      v.expect_eq(counted[n].marked, rows[n - 1].Fstar, "F*_" + k + " series");
    }
    v.expect_eq(counted[2].marked_prime, 2, "P*_2");
    report(5, "marked censuses satisfy P*_n = n(n-1)P~_{n-1} and F*_n = 2n(n-1)F~_{n-1}, 2 <= n <= 5", v, census_s);
  }
  {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<long long> literal{1, 1, 4, 30, 336};
    for (int n = 1; n <= 5; ++n) {
      const BigInt got = count_srp(n);
      v.expect_eq(got, factorial(n - 1) * catalan_number(n - 1), "|SRP_" + std::to_string(n) + "|");
      v.expect_eq(got, literal[n - 1], "|SRP_" + std::to_string(n) + "| literal");
    }
    report(6, "SRP census: |SRP_n| = (n-1)! C_{n-1} for n <= 5", v, seconds_since(start));
  }
  {
    Verdict v;
    const auto r = roundtrip_suite(4);
    if (!r.passed) v.fail(r.detail);
    v.expect_eq(r.checked, 2 * 720, "objects checked");
    if (r.seconds >= roundtrip_limit_s) v.fail("took " + std::to_string(r.seconds) + " s");
    report(7, "psi and its inverse are mutually inverse on all 720 objects each way at n = 4", v, r.seconds);
  }
  {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const auto results = check_all_identities(series_order);
    const double s = seconds_since(start);
    int required = 0;
    for (const auto& r : results) {
      if (r.informational) continue;
      ++required;
      if (!r.ok()) v.fail(r.id + " residual x^" + std::to_string(*r.first_bad) + " = " + r.bad_value.str());
    }
    if (required < 16) v.fail("only " + std::to_string(required) + " identities checked");
    if (s >= series_limit_s) v.fail("took " + std::to_string(s) + " s");
    report(8, "series identities have zero residuals through x^12", v, s);
  }
  {
    Verdict v;
    double s = 0;
    std::uint64_t cases = 0;
    for (int n = 1; n <= 6; ++n) {
      const auto r = theorem53_suite(n);
      s += r.seconds;
      cases += r.checked;
      if (!r.passed) v.fail("n=" + std::to_string(n) + ": " + r.detail);
    }
    v.expect_eq(cases, 1 + 2 + 5 + 14 + 42 + 132, "132-avoiders checked for n = 1..6");
    report(9, "Borie's map equals the tail of alpha^-1 on labeled paths for all 132-avoiders, n <= 6", v, s);
  }
  {
    Verdict v;
    double s = 0;
    for (int n = 1; n <= 5; ++n) {
      const auto r = path_preimage_suite(n);
      s += r.seconds;
      if (!r.passed) v.fail("n=" + std::to_string(n) + ": " + r.detail);
      v.expect_eq(r.checked, factorial(n), "growth sequences at n=" + std::to_string(n));
    }
    report(10, "alpha maps growth sequences on the path bijectively onto the n! labeled paths, n <= 5", v, s);
  }
  {
    Verdict v;
    double s = 0;
    for (int n = 1; n <= 4; ++n) {
      const auto r = property_suite_exhaustive(n);
      s += r.seconds;
      if (!r.passed) v.fail("n=" + std::to_string(n) + ": " + r.detail);
    }
    for (int n = 6; n <= 8; ++n) {
      const auto r = property_suite_random(n, random_samples, random_seed + n);
      s += r.seconds;
      if (!r.passed) v.fail("n=" + std::to_string(n) + ": " + r.detail);
      v.expect_eq(r.checked, 2 * random_samples, "random instances at n=" + std::to_string(n));
    }
    report(11, "parking invariants hold exhaustively for n <= 4 and on 10^4 random instances at n = 6..8", v, s);
  }

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
