#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treepark/series_lab.hpp"

using namespace treepark;

namespace {

std::vector<BigInt> column(const CountTable& t, BigInt CountRow::*field) {
  std::vector<BigInt> out;
  for (const auto& row : t.rows) out.push_back(row.*field);
  return out;
}

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ExactSeries, Arithmetic) {
  const Series x = Series::variable(6);
  const Series e = treepark::exp(x);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(e[k], Rational(1, factorial(k)));
  EXPECT_EQ(treepark::log(e), x);
  EXPECT_EQ(treepark::exp(Series(5)), Series::one(5));
  EXPECT_EQ(reciprocal(Rational(1) - x) * (Rational(1) - x), Series::one(6));
  EXPECT_EQ(treepark::sqrt(Series::one(4) + x.truncated(4)) * treepark::sqrt(Series::one(4) + x.truncated(4)),
            Series::one(4) + x.truncated(4));
  EXPECT_EQ(x.derivative().order(), 5);
  EXPECT_EQ(x.integral().order(), 7);
  EXPECT_EQ((x * x).shifted(1)[3], Rational(1));
}

TEST(ExactSeries, PreconditionErrors) {
  const Series x = Series::variable(4);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::limit_exceeded;
  };
  EXPECT_EQ(code([&] { compose(x, Rational(1) + x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { treepark::exp(Rational(1) + x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { treepark::log(x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { treepark::sqrt(x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { treepark::sqrt(Rational(2) + x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { reciprocal(x); }), errc::branch_undefined);
  EXPECT_EQ(code([&] { (void)x[5]; }), errc::order_mismatch);
  EXPECT_EQ(code([&] { (void)x.truncated(9); }), errc::order_mismatch);
}

TEST(ExactSeries, Composition) {
  const Series x = Series::variable(6);
  const Series geom = reciprocal(Rational(1) - x);
  // 1/(1 - 2x) from 1/(1-y) at y = 2x
  const Series r = compose(geom, Rational(2) * x);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(r[k], Rational(BigInt(1) << k));
}

TEST(Counts, CatalanAndSchroder) {
  const auto c = oracle::catalan(12);
  const auto s = oracle::schroder(8);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(catalan_number(n), BigInt(c[n]));
  const auto ours = large_schroder_numbers(8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(ours[n], BigInt(s[n]));
  EXPECT_EQ(s[3], 22u);
  const Series cs = catalan_series(10);
  const Series ss = schroder_series(8);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(cs[n], Rational(c[n]));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(ss[n], Rational(s[n]));
}

TEST(Counts, ClosedForms) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(parking_function_count(n), BigInt(oracle::parking_count(n))) << n;
  const auto t = closed_counts(6);
  EXPECT_EQ(column(t, &CountRow::F), big({1, 6, 132, 6384, 544320, 72282240}));
  EXPECT_EQ(column(t, &CountRow::P), big({1, 2, 24, 720, 40320, 3628800}));
  EXPECT_EQ(column(t, &CountRow::Ptilde), big({1, 2, 12, 132, 2160, 47280}));
  EXPECT_EQ(column(t, &CountRow::Ftilde), big({1, 4, 39, 628, 14285, 422256}));
  EXPECT_EQ(column(t, &CountRow::Pstar), big({1, 2, 12, 144, 2640, 64800}));
  EXPECT_EQ(column(t, &CountRow::Fstar), big({1, 4, 48, 936, 25120, 857100}));
}

TEST(Counts, SeriesCoefficientsMatchClosedForms) {
  const Series f = F_series(8);
  const Series p = P_closed_series(8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(f[n] * Rational(factorial(n) * factorial(n)), Rational(parking_function_count(n)));
    EXPECT_EQ(p[n] * Rational(factorial(n) * factorial(n)), Rational(prime_parking_function_count(n)));
  }
}

TEST(Ode, KnownPrefixIsMonotone) {
  const auto sol = solve_distribution_ode(10);
  EXPECT_LE(sol.rounds, 10);
  for (std::size_t r = 1; r < sol.history.size(); ++r) {
    const auto& prev = sol.history[r - 1];
    const auto& cur = sol.history[r];
    for (int k = 0; k <= static_cast<int>(r); ++k) EXPECT_EQ(prev[k], cur[k]) << "round " << r << " coeff " << k;
  }
  EXPECT_EQ(sol.series[1], Rational(1));
  EXPECT_EQ(sol.series[2] * 2, Rational(4));
}

TEST(Identities, AllVanishAtOrderTwelve) {
  for (const auto& r : check_all_identities(12)) {
    if (r.informational) continue;
    EXPECT_TRUE(r.ok()) << r.id << " first bad x^" << r.first_bad.value_or(-1) << " = " << r.bad_value;
  }
}

TEST(Identities, MarkedEquationWithFIsRecordedOnly) {
  const auto r = check_identity("fstar-functional-with-F", 8);
  EXPECT_TRUE(r.informational);
  EXPECT_TRUE(r.first_bad.has_value());
  EXPECT_EQ(*r.first_bad, 3);
}

TEST(Identities, CompositionToOrderTen) {
  const auto r = check_identity("f-composition", 10);
  EXPECT_FALSE(r.first_bad.has_value());
  EXPECT_EQ(r.order, 10);
}

TEST(Identities, UnknownId) {
  try {
    check_identity("nope", 5);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
  }
}
