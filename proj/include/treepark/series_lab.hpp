#pragma once

// Generating functions for tree parking functions and the identities
// relating them, checked as exactly-zero residuals.
//
//   F(x)  = sum F_n x^n/(n!)^2     parking functions on trees with n vertices
//   P(x)  = sum P_n x^n/(n!)^2     prime parking functions, P_n = (2n-2)!
//   F~(x) = sum F~_n x^n/n!        parking distributions
//   P~(x) = sum P~_n x^n/n!        prime parking distributions, (n-1)! S_{n-1}
//   P*(x), F*(x)                   the same with one leaf marked
//   T(x)  = sum n^(n-1) x^n/n!     rooted labeled trees
//   C(x), S(x)                     Catalan and large Schröder ordinary GFs

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treepark/error.hpp"
#include "treepark/series.hpp"

namespace treepark {

using Series = ExactSeries<Rational>;

inline constexpr int default_series_order = 12;

// ---------------------------------------------------------------------------
// Integer sequences from their closed forms.

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

inline BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

// S_0..S_max via S_n = S_{n-1} + sum_{k<n} S_k S_{n-1-k}.
inline std::vector<BigInt> large_schroder_numbers(int max) {
  std::vector<BigInt> s{1};
  for (int n = 1; n <= max; ++n) {
    BigInt next = s[n - 1];
    for (int k = 0; k < n; ++k) next += s[k] * s[n - 1 - k];
    s.push_back(next);
  }
  return s;
}

// ((n-1)!)^2 * sum_{i<n} (n-i)(2n)^i / i!; the inner sum is not an integer
// in general, so it is accumulated exactly.
inline BigInt parking_function_count(int n) {
  Rational sum = 0;
  BigInt power = 1;
  for (int i = 0; i < n; ++i) {
    sum += Rational(BigInt(n - i) * power, factorial(i));
    power *= 2 * n;
  }
  const Rational total = Rational(factorial(n - 1) * factorial(n - 1)) * sum;
  if (boost::multiprecision::denominator(total) != 1) {
    throw error(errc::identity_violated, "closed form for F_" + std::to_string(n) + " is not an integer");
  }
  return boost::multiprecision::numerator(total);
}

inline BigInt prime_parking_function_count(int n) { return factorial(2 * n - 2); }

inline BigInt prime_distribution_count(int n) { return factorial(n - 1) * large_schroder_numbers(n - 1)[n - 1]; }

// ---------------------------------------------------------------------------
// Series.

// sum_{n>=1} n^(n-1) x^n / n!
inline Series tree_function(int order) {
  Series t(order);
  for (int n = 1; n <= order; ++n) t.coeff(n) = Rational(boost::multiprecision::pow(BigInt(n), n - 1), factorial(n));
  return t;
}

// a(c x)
inline Series scaled_argument(const Series& a, const Rational& c) {
  Series r = a;
  Rational power = 1;
  for (int k = 0; k <= r.order(); ++k) {
    r.coeff(k) *= power;
    power *= c;
  }
  return r;
}

// (1 - sqrt(1 - 4x)) / (2x)
inline Series catalan_series(int order) {
  Series inner = Series::one(order + 1);
  inner.coeff(1) = -4;
  return (Rational(1, 2) * (Rational(1) - treepark::sqrt(inner))).divided_by_x();
}

// (1 - x - sqrt(x^2 - 6x + 1)) / (2x)
inline Series schroder_series(int order) {
  Series inner = Series::one(order + 1);
  if (order + 1 >= 1) inner.coeff(1) = -6;
  if (order + 1 >= 2) inner.coeff(2) = 1;
  return (Rational(1, 2) * (Rational(1) - Series::variable(order + 1) - treepark::sqrt(inner))).divided_by_x();
}

// F from T(2x) + ln(1 - T(2x)/2).
inline Series F_series(int order) {
  if (order < 1) throw error(errc::order_mismatch, "order must be at least 1");
  const Series t2 = scaled_argument(tree_function(order), 2);
  return t2 + treepark::log(Rational(1) - Rational(1, 2) * t2);
}

// P from its closed form sum (2n-2)! x^n/(n!)^2, without the identity checks.
inline Series P_closed_series(int order) {
  Series p(order);
  for (int n = 1; n <= order; ++n) {
    p.coeff(n) = Rational(prime_parking_function_count(n), factorial(n) * factorial(n));
  }
  return p;
}

// P~ from (n-1)! S_{n-1}.
inline Series Ptilde_series(int order) {
  Series p(order);
  const auto s = large_schroder_numbers(order);
  for (int n = 1; n <= order; ++n) p.coeff(n) = Rational(factorial(n - 1) * s[n - 1], factorial(n));
  return p;
}

struct OdeSolution {
  Series series;
  int rounds = 0;
  std::vector<Series> history;  // iterate after each round
};

// F~' = e^F~ (1 + x F~')(1 + 2x F~'), F~(0) = 0, by Picard iteration
// starting from x. Each round fixes one more coefficient, so the iterate
// must repeat itself within `order` rounds.
inline OdeSolution solve_distribution_ode(int order) {
  if (order < 1) throw error(errc::order_mismatch, "order must be at least 1");
  OdeSolution out{Series::variable(order), 0, {}};
  const Series x = Series::variable(order);
  while (out.rounds < order) {
    const Series& f = out.series;
    const Series d = f.derivative();
    const Series xd = x.truncated(d.order()) * d;
    Series next = (treepark::exp(f.truncated(d.order())) * (Rational(1) + xd) * (Rational(1) + Rational(2) * xd))
                      .integral();
    ++out.rounds;
    out.history.push_back(next);
    const bool stable = next == f;
    out.series = std::move(next);
    if (stable) return out;
  }
  throw error(errc::fixed_point_not_converged,
              "distribution ODE iterate still moving after " + std::to_string(order) + " rounds");
}

inline Series Ftilde_series(int order) { return solve_distribution_ode(order).series; }

// x + x^2 P~'(x)
inline Series Pstar_series(int order) {
  const Series p = Ptilde_series(order);
  return Series::variable(order) + p.derivative().shifted(2).truncated(order);
}

// x + 2x^2 F~'(x)
inline Series Fstar_series(int order) {
  const Series f = Ftilde_series(order);
  return Series::variable(order) + Rational(2) * f.derivative().shifted(2).truncated(order);
}

// ---------------------------------------------------------------------------
// Identity residuals.

struct IdentityResult {
  std::string id;
  std::string statement;
  int order = 0;                   // residual known through x^order
  std::optional<int> first_bad;    // first nonzero residual coefficient
  Rational bad_value = 0;
  bool informational = false;      // recorded, not required to vanish

  bool ok() const { return informational || !first_bad.has_value(); }
};

struct IdentitySpec {
  std::string id;
  std::string statement;
  bool informational;
  std::function<Series(int)> residual;  // argument: working order
};

// Working order exceeds the requested one so derivatives and divisions by x
// still leave the residual known through the requested order.
inline constexpr int identity_margin = 3;

inline const std::vector<IdentitySpec>& identity_specs() {
  static const std::vector<IdentitySpec> specs = [] {
    const auto x = [](int w) { return Series::variable(w); };
    std::vector<IdentitySpec> v;
    v.push_back({"f-tree-function", "F = T(2x) + ln(1 - T(2x)/2) matches the closed form for F_n", false, [](int w) {
                   Series closed(w);
                   for (int n = 1; n <= w; ++n) {
                     closed.coeff(n) = Rational(parking_function_count(n), factorial(n) * factorial(n));
                   }
                   return F_series(w) - closed;
                 }});
    v.push_back({"f-composition", "F(x) = P(x e^F(x))", false, [x](int w) {
                   const Series f = F_series(w);
                   return f - compose(P_closed_series(w), x(w) * treepark::exp(f));
                 }});
    v.push_back({"p-composition", "P(x e^F) = T(2x) + ln(1 - T(2x)/2)", false, [x](int w) {
                   const Series t2 = scaled_argument(tree_function(w), 2);
                   const Series rhs = t2 + treepark::log(Rational(1) - Rational(1, 2) * t2);
                   return compose(P_closed_series(w), x(w) * treepark::exp(F_series(w))) - rhs;
                 }});
    v.push_back({"catalan", "C = 1 + x C^2 and C_n = binom(2n, n)/(n+1)", false, [x](int w) {
                   const Series c = catalan_series(w);
                   Series closed(w);
                   for (int n = 0; n <= w; ++n) closed.coeff(n) = Rational(catalan_number(n));
                   const Series r = c - (Rational(1) + x(w) * c * c);
                   return r + (c - closed);
                 }});
    v.push_back({"catalan-quotient", "C / (xC)' = (1 - 2xC) / (1 - xC)", false, [x](int w) {
                   const Series c = catalan_series(w);
                   const Series xc = x(w) * c;
                   const Series dxc = xc.derivative();
                   return c * reciprocal(dxc) - (Rational(1) - Rational(2) * xc) * reciprocal(Rational(1) - xc);
                 }});
    v.push_back({"catalan-derivative", "C' = C^2 / (1 - 2xC)", false, [x](int w) {
                   const Series c = catalan_series(w);
                   return c.derivative() - c * c * reciprocal(Rational(1) - Rational(2) * x(w) * c);
                 }});
    v.push_back({"p-closed", "P = 2xC + ln(1 - xC)", false, [x](int w) {
                   const Series xc = x(w) * catalan_series(w);
                   return P_closed_series(w) - (Rational(2) * xc + treepark::log(Rational(1) - xc));
                 }});
    v.push_back({"p-prime", "P' = C", false,
                 [](int w) { return P_closed_series(w).derivative() - catalan_series(w); }});
    v.push_back({"ftilde-composition", "F~(x) = P~(x e^F~(x))", false, [x](int w) {
                   const Series f = Ftilde_series(w);
                   return f - compose(Ptilde_series(w), x(w) * treepark::exp(f));
                 }});
    v.push_back({"pstar-coefficients", "P* = x + x^2 P~' with P*_n = n(n-1) P~_{n-1}", false, [](int w) {
                   Series marked(w);
                   const Series p = Ptilde_series(w);
                   marked.coeff(1) = 1;
                   for (int n = 2; n <= w; ++n) {
                     // P*_n/n! = n(n-1) P~_{n-1}/n! = P~_{n-1}/(n-2)!
                     marked.coeff(n) = p[n - 1] * Rational(factorial(n - 1), factorial(n - 2));
                   }
                   return marked - Pstar_series(w);
                 }});
    v.push_back({"pstar-functional", "P* = x + x P* / (1 - x P~')", false, [x](int w) {
                   const Series ps = Pstar_series(w);
                   const Series d = Ptilde_series(w).derivative();
                   return ps - (x(w) + x(w) * ps * reciprocal(Rational(1) - x(d.order()) * d));
                 }});
    v.push_back({"quadratic", "x (P~')^2 + (x - 1) P~' + 1 = 0", false, [x](int w) {
                   const Series d = Ptilde_series(w).derivative();
                   const Series xs = x(d.order());
                   return xs * d * d + (xs - Rational(1)) * d + Rational(1);
                 }});
    v.push_back({"schroder", "P~' = (1 - x - sqrt(x^2 - 6x + 1)) / (2x)", false,
                 [](int w) { return Ptilde_series(w).derivative() - schroder_series(w); }});
    v.push_back({"fstar-coefficients", "F* = x + 2x^2 F~' with F*_n = 2n(n-1) F~_{n-1}", false, [](int w) {
                   Series marked(w);
                   const Series f = Ftilde_series(w);
                   marked.coeff(1) = 1;
                   for (int n = 2; n <= w; ++n) {
                     marked.coeff(n) = Rational(2) * f[n - 1] * Rational(factorial(n - 1), factorial(n - 2));
                   }
                   return marked - Fstar_series(w);
                 }});
    v.push_back({"fstar-functional", "F* = x + x F* e^F~ + x^2 F~' + x^2 F* F~' e^F~", false, [x](int w) {
                   const Series f = Ftilde_series(w);
                   const Series fs = Fstar_series(w);
                   const Series e = treepark::exp(f);
                   const Series d = f.derivative();
                   const Series x2 = x(w) * x(w);
                   return fs - (x(w) + x(w) * fs * e + x2 * d + x2 * fs * d * e);
                 }});
    v.push_back({"ftilde-ode", "F~' = e^F~ (1 + x F~')(1 + 2x F~')", false, [x](int w) {
                   const Series f = Ftilde_series(w);
                   const Series d = f.derivative();
                   const Series xd = x(w) * d;
                   return d - treepark::exp(f) * (Rational(1) + xd) * (Rational(1) + Rational(2) * xd);
                 }});
    v.push_back({"f-ode", "F' = e^F (1 + x F')^2", false, [x](int w) {
                   const Series f = F_series(w);
                   const Series d = f.derivative();
                   const Series one_xd = Rational(1) + x(w) * d;
                   return d - treepark::exp(f) * one_xd * one_xd;
                 }});
    // The marked-distribution equation written with the parking-function
    // series F in place of F~; it does not vanish and is kept for reference.
    v.push_back({"fstar-functional-with-F", "F* = x + x F* e^F + x^2 F' + x^2 F* F' e^F (with F, not F~)", true,
                 [x](int w) {
                   const Series f = F_series(w);
                   const Series fs = Fstar_series(w);
                   const Series e = treepark::exp(f);
                   const Series d = f.derivative();
                   const Series x2 = x(w) * x(w);
                   return fs - (x(w) + x(w) * fs * e + x2 * d + x2 * fs * d * e);
                 }});
    return v;
  }();
  return specs;
}

inline IdentityResult check_identity(const IdentitySpec& spec, int order) {
  const Series r = spec.residual(order + identity_margin);
  if (r.order() < order) {
    throw error(errc::order_mismatch, spec.id + " residual only known to x^" + std::to_string(r.order()));
  }
  IdentityResult out{spec.id, spec.statement, order, std::nullopt, 0, spec.informational};
  const auto bad = r.truncated(order).first_nonzero();
  if (bad) {
    out.first_bad = *bad;
    out.bad_value = r[*bad];
  }
  return out;
}

inline IdentityResult check_identity(const std::string& id, int order) {
  for (const auto& spec : identity_specs()) {
    if (spec.id == id) return check_identity(spec, order);
  }
  throw error(errc::parse_error, "unknown identity '" + id + "'");
}

inline std::vector<IdentityResult> check_all_identities(int order = default_series_order) {
  std::vector<IdentityResult> out;
  for (const auto& spec : identity_specs()) out.push_back(check_identity(spec, order));
  return out;
}

inline void require_identities(std::initializer_list<const char*> ids, int order) {
  for (const char* id : ids) {
    const auto r = check_identity(std::string(id), order);
    if (!r.ok()) {
      throw error(errc::identity_violated,
                  r.id + " fails at x^" + std::to_string(*r.first_bad) + " (residual " + r.bad_value.str() + ")");
    }
  }
}

// P from the closed form, after confirming P = 2xC + ln(1 - xC), P' = C and
// F = P(x e^F) through x^order.
inline Series P_series(int order) {
  if (order < 1) throw error(errc::order_mismatch, "order must be at least 1");
  require_identities({"p-closed", "p-prime", "f-composition"}, order);
  return P_closed_series(order);
}

struct DistributionSeries {
  Series Ftilde;
  Series Ptilde;
  Series Pstar;
  Series Fstar;
};

// All four distribution series, after confirming every distribution
// identity and the parking-function ODE through x^order.
inline DistributionSeries distribution_series(int order) {
  if (order < 1) throw error(errc::order_mismatch, "order must be at least 1");
  require_identities({"ftilde-composition", "pstar-coefficients", "pstar-functional", "quadratic", "schroder",
                      "fstar-coefficients", "fstar-functional", "ftilde-ode", "f-ode"},
                     order);
  return {Ftilde_series(order), Ptilde_series(order), Pstar_series(order), Fstar_series(order)};
}

// ---------------------------------------------------------------------------
// Count table.

struct CountRow {
  int n = 0;
  BigInt F, P, Ftilde, Ptilde, Pstar, Fstar, catalan, schroder;  // catalan = C_{n-1}, schroder = S_{n-1}
};

struct CountTable {
  std::vector<CountRow> rows;
};

inline BigInt integral_coefficient(const Rational& c, const BigInt& normalization, const std::string& what) {
  const Rational v = c * Rational(normalization);
  if (boost::multiprecision::denominator(v) != 1) {
    throw error(errc::identity_violated, what + " is not an integer: " + v.str());
  }
  return boost::multiprecision::numerator(v);
}

inline CountTable closed_counts(int max_n) {
  if (max_n < 1) throw error(errc::order_mismatch, "table needs at least one row");
  const auto s = large_schroder_numbers(max_n);
  const Series ftilde = Ftilde_series(max_n);
  CountTable table;
  for (int n = 1; n <= max_n; ++n) {
    CountRow row;
    row.n = n;
    row.F = parking_function_count(n);
    row.P = prime_parking_function_count(n);
    row.Ftilde = integral_coefficient(ftilde[n], factorial(n), "F~_" + std::to_string(n));
    row.Ptilde = factorial(n - 1) * s[n - 1];
    row.catalan = catalan_number(n - 1);
    row.schroder = s[n - 1];
    table.rows.push_back(std::move(row));
  }
  for (auto& row : table.rows) {
    if (row.n == 1) {
      row.Pstar = 1;
      row.Fstar = 1;
    } else {
      const auto& prev = table.rows[row.n - 2];
      row.Pstar = BigInt(row.n) * (row.n - 1) * prev.Ptilde;
      row.Fstar = BigInt(2) * row.n * (row.n - 1) * prev.Ftilde;
    }
  }
  return table;
}

}  // namespace treepark
