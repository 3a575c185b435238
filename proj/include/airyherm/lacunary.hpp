#pragma once

#include "airyherm/hermite.hpp"
#include "airyherm/rational.hpp"
#include "airyherm/series.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace airyherm {

// One evaluation point of the triple lacunary identity: the series variable
// is truncated at `order`, the Hermite argument is the exact rational `u`.
struct LacunaryCase {
  BigRational u;
  std::size_t order = 12;
};

struct LacunaryVerdict {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  std::optional<std::size_t> first_mismatch;
  bool pass = false;
};

// Catalan number generating function, coefficients by the convolution
// recurrence c_{n+1} = sum c_i c_{n-i}.
inline TruncatedSeries catalan_series(std::size_t order) {
  std::vector<BigRational> c(order, BigRational(0));
  if (order > 0) c[0] = 1;
  for (std::size_t n = 0; n + 1 < order; ++n) {
    BigRational acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += c[i] * c[n - i];
    c[n + 1] = acc;
  }
  return TruncatedSeries(std::move(c));
}

// Left side: sum_{n<N} H_{3n}(u) z^n / n!, combinatorial convention.
inline TruncatedSeries lhs_series(const LacunaryCase& c) {
  if (c.order < 1) throw std::domain_error("lacunary: order must be >= 1");
  std::vector<BigRational> v(c.order);
  BigRational nfact = 1;
  for (std::size_t n = 0; n < c.order; ++n) {
    if (n > 0) nfact *= BigRational(static_cast<std::int64_t>(n));
    v[n] = hermite_value(HermiteConvention::Combinatorial,
                         static_cast<unsigned>(3 * n), c.u) /
           nfact;
  }
  return TruncatedSeries(std::move(v));
}

// w(z) = (1 - sqrt(1 - 12 u z)) / (6 z); equals u * C(3 u z) with C the
// Catalan series (the suites check both constructions against each other).
inline TruncatedSeries w_series(const LacunaryCase& c) {
  if (c.order < 1) throw std::domain_error("lacunary: order must be >= 1");
  // Build the radicand one order higher so the division by z keeps order N.
  const std::size_t n1 = c.order + 1;
  TruncatedSeries radicand =
      TruncatedSeries::one(n1) - TruncatedSeries::variable(n1) * (12 * c.u);
  TruncatedSeries num = TruncatedSeries::one(n1) - sqrt(radicand);
  return shift_div(num, 1) * BigRational(1, 6);
}

// Formal 2F0: sum_k (a)_k (b)_k / k! * arg^k.  Termination relies on the
// argument having valuation >= 2, so term k contributes nothing below z^{2k};
// the divergent analytic series never enters.
inline TruncatedSeries hyp2f0_formal(const BigRational& a, const BigRational& b,
                                     const TruncatedSeries& arg) {
  const std::size_t n = arg.order();
  if (arg.valuation() < 2 && arg.valuation() < n)
    throw std::domain_error("hyp2f0_formal: argument valuation must be >= 2");
  TruncatedSeries acc = TruncatedSeries::one(n);
  TruncatedSeries arg_pow = TruncatedSeries::one(n);
  BigRational coeff = 1;  // (a)_k (b)_k / k!
  for (std::size_t k = 1; 2 * k < n; ++k) {
    const BigRational km1(static_cast<std::int64_t>(k - 1));
    coeff *= (a + km1) * (b + km1) / BigRational(static_cast<std::int64_t>(k));
    arg_pow = arg_pow * arg;
    acc = acc + arg_pow * coeff;
  }
  return acc;
}

// Right side of the identity:
//   exp((w-u)(3u-w)/6) / sqrt(1-6wz) * 2F0(1/6, 5/6; -; 54 z^2/(1-6wz)^3).
inline TruncatedSeries rhs_series(const LacunaryCase& c) {
  const std::size_t n = c.order;
  const TruncatedSeries w = w_series(c);
  const TruncatedSeries z = TruncatedSeries::variable(n);
  const TruncatedSeries one = TruncatedSeries::one(n);

  const TruncatedSeries exponent =
      (w - c.u) * (one * (3 * c.u) - w) * BigRational(1, 6);
  const TruncatedSeries expo = exp(exponent);

  const TruncatedSeries d = one - w * z * BigRational(6);
  const TruncatedSeries inv_sqrt = div(one, sqrt(d));

  const TruncatedSeries arg = div(z * z * BigRational(54), d * d * d);
  const TruncatedSeries hyp =
      hyp2f0_formal(BigRational(1, 6), BigRational(5, 6), arg);

  return expo * inv_sqrt * hyp;
}

inline std::optional<std::size_t> first_coeff_mismatch(
    const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = a.order() < b.order() ? a.order() : b.order();
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return k;
  if (a.order() != b.order()) return n;
  return std::nullopt;
}

// Exact coefficient comparison of the two sides.  A pass at >= 3N+1 distinct
// rational u certifies the polynomial identity through z^N, because the z^n
// coefficient of either side is a polynomial in u of degree <= 3n.
inline LacunaryVerdict verify_lacunary(const LacunaryCase& c) {
  LacunaryVerdict v;
  v.lhs = lhs_series(c);
  v.rhs = rhs_series(c);
  v.first_mismatch = first_coeff_mismatch(v.lhs, v.rhs);
  v.pass = !v.first_mismatch.has_value();
  return v;
}

}  // namespace airyherm
