#pragma once

// Truncated formal power series with exact coefficients.
//
// A series of order N knows c_0..c_N exactly; everything past x^N is
// unknown. Operations propagate that: sums and products keep the smaller
// order, a derivative loses one, an integral or a shift by x gains one.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treepark/error.hpp"

namespace treepark {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// Exact square root of a non-negative rational, if it has one.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

inline std::optional<Rational> exact_sqrt(const BigInt& q) { return exact_sqrt(Rational(q)); }

}  // namespace detail

template <typename Coeff = Rational>
class ExactSeries {
 public:
  using coeff_type = Coeff;

  explicit ExactSeries(int order) : c_(checked(order) + 1, Coeff(0)) {}

  ExactSeries(std::vector<Coeff> coeffs, int order) : c_(checked(order) + 1, Coeff(0)) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
  }

  static ExactSeries constant(Coeff value, int order) {
    ExactSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  static ExactSeries one(int order) { return constant(Coeff(1), order); }

  // The series x.
  static ExactSeries variable(int order) {
    ExactSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

  const Coeff& operator[](int k) const {
    if (k < 0 || k > order()) {
      throw error(errc::order_mismatch,
                  "coefficient x^" + std::to_string(k) + " unknown at order " + std::to_string(order()));
    }
    return c_[k];
  }

  Coeff& coeff(int k) {
    if (k < 0 || k > order()) {
      throw error(errc::order_mismatch,
                  "coefficient x^" + std::to_string(k) + " unknown at order " + std::to_string(order()));
    }
    return c_[k];
  }

  const std::vector<Coeff>& coeffs() const noexcept { return c_; }

  ExactSeries truncated(int order) const {
    if (order > this->order()) {
      throw error(errc::order_mismatch, "cannot extend a series of order " + std::to_string(this->order()) +
                                            " to order " + std::to_string(order));
    }
    return ExactSeries(std::vector<Coeff>(c_.begin(), c_.begin() + order + 1), order);
  }

  // Lowest k with c_k != 0, if any within the known range.
  std::optional<int> first_nonzero() const {
    for (int k = 0; k <= order(); ++k) {
      if (c_[k] != 0) return k;
    }
    return std::nullopt;
  }
  bool is_zero() const { return !first_nonzero().has_value(); }

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend ExactSeries operator-(const ExactSeries& a) {
    ExactSeries r(a.order());
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = -a.c_[k];
    return r;
  }
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
    ExactSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend ExactSeries operator*(const Coeff& s, const ExactSeries& a) {
    ExactSeries r(a.order());
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = s * a.c_[k];
    return r;
  }
  friend ExactSeries operator+(const Coeff& s, const ExactSeries& a) {
    ExactSeries r = a;
    r.c_[0] += s;
    return r;
  }
  friend ExactSeries operator-(const Coeff& s, const ExactSeries& a) { return s + (-a); }
  friend ExactSeries operator+(const ExactSeries& a, const Coeff& s) { return s + a; }
  friend ExactSeries operator-(const ExactSeries& a, const Coeff& s) { return a + Coeff(-s); }

  friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

  // x^k * a
  ExactSeries shifted(int k = 1) const {
    ExactSeries r(order() + k);
    for (int i = 0; i <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  // a / x; needs c_0 = 0.
  ExactSeries divided_by_x() const {
    if (c_[0] != 0) throw error(errc::branch_undefined, "division by x needs a zero constant term");
    if (order() < 1) throw error(errc::order_mismatch, "nothing left after dividing by x");
    return ExactSeries(std::vector<Coeff>(c_.begin() + 1, c_.end()), order() - 1);
  }

  ExactSeries derivative() const {
    if (order() < 1) throw error(errc::order_mismatch, "derivative of an order-0 series is unknown");
    ExactSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.c_[k - 1] = Coeff(k) * c_[k];
    return r;
  }

  // Antiderivative with zero constant term.
  ExactSeries integral() const {
    ExactSeries r(order() + 1);
    for (int k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / Coeff(k + 1);
    return r;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw error(errc::order_mismatch, "negative truncation order");
    return order;
  }

  std::vector<Coeff> c_;
};

// 1 / a; needs a_0 != 0.
template <typename C>
ExactSeries<C> reciprocal(const ExactSeries<C>& a) {
  if (a[0] == 0) throw error(errc::branch_undefined, "reciprocal of a series with zero constant term");
  ExactSeries<C> b(a.order());
  b.coeff(0) = C(1) / a[0];
  for (int n = 1; n <= a.order(); ++n) {
    C acc(0);
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b.coeff(n) = -acc / a[0];
  }
  return b;
}

// exp(a) for a_0 = 0, from n b_n = sum_k k a_k b_{n-k}.
template <typename C>
ExactSeries<C> exp(const ExactSeries<C>& a) {
  if (a[0] != 0) throw error(errc::branch_undefined, "exp needs a zero constant term");
  ExactSeries<C> b(a.order());
  b.coeff(0) = 1;
  for (int n = 1; n <= a.order(); ++n) {
    C acc(0);
    for (int k = 1; k <= n; ++k) acc += C(k) * a[k] * b[n - k];
    b.coeff(n) = acc / C(n);
  }
  return b;
}

// ln(a) for a_0 = 1, as the integral of a'/a.
template <typename C>
ExactSeries<C> log(const ExactSeries<C>& a) {
  if (a[0] != 1) throw error(errc::branch_undefined, "ln needs constant term 1");
  if (a.order() == 0) return ExactSeries<C>(0);
  return (a.derivative() * reciprocal(a.truncated(a.order() - 1))).integral();
}

// Principal square root: b_0 is the positive root of a_0, which must be a
// perfect square.
template <typename C>
ExactSeries<C> sqrt(const ExactSeries<C>& a) {
  const auto root = detail::exact_sqrt(a[0]);
  if (!root || *root == 0) throw error(errc::branch_undefined, "sqrt needs a positive square constant term");
  ExactSeries<C> b(a.order());
  b.coeff(0) = C(*root);
  const C twice = C(2) * b[0];
  for (int n = 1; n <= a.order(); ++n) {
    C acc = a[n];
    for (int k = 1; k < n; ++k) acc -= b[k] * b[n - k];
    b.coeff(n) = acc / twice;
  }
  return b;
}

// a(b(x)) for b_0 = 0, by Horner's rule.
template <typename C>
ExactSeries<C> compose(const ExactSeries<C>& a, const ExactSeries<C>& b) {
  if (b[0] != 0) throw error(errc::branch_undefined, "composition needs an inner series with zero constant term");
  const int order = std::min(a.order(), b.order());
  const ExactSeries<C> inner = b.truncated(order);
  ExactSeries<C> r(order);
  for (int k = order; k >= 0; --k) {
    r = r * inner;
    r.coeff(0) += a[k];
  }
  return r;
}

}  // namespace treepark
