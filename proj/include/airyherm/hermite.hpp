#pragma once

#include "airyherm/polynomial.hpp"
#include "airyherm/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace airyherm {

// Three Hermite normalizations, distinguished by their exponential
// generating functions:
//   Combinatorial  e^{uz + z^2/2}   H_{n+1} = u H_n + n H_{n-1}
//   Probabilists   e^{uz - z^2/2}   He_{n+1} = u He_n - n He_{n-1}
//   Physicists     e^{2uz - z^2}    H_{n+1} = 2u H_n - 2n H_{n-1}
enum class HermiteConvention { Combinatorial, Probabilists, Physicists };

inline RationalPolynomial hermite_polynomial(HermiteConvention conv,
                                             unsigned n) {
  RationalPolynomial u = RationalPolynomial::monomial(1, 1);
  RationalPolynomial p0 = RationalPolynomial::constant(1);
  if (n == 0) return p0;
  RationalPolynomial p1 = u;
  if (conv == HermiteConvention::Physicists) p1 = BigRational(2) * u;
  for (unsigned k = 1; k < n; ++k) {
    const BigRational kk(static_cast<std::int64_t>(k));
    RationalPolynomial next;
    switch (conv) {
      case HermiteConvention::Combinatorial:
        next = u * p1 + kk * p0;
        break;
      case HermiteConvention::Probabilists:
        next = u * p1 - kk * p0;
        break;
      case HermiteConvention::Physicists:
        next = BigRational(2) * (u * p1) - (BigRational(2) * kk) * p0;
        break;
    }
    p0 = p1;
    p1 = next;
  }
  return p1;
}

// Value recurrence; avoids building the polynomial when only H_n(u) is
// needed (the lacunary sums evaluate up to H_{3(N-1)}).
inline BigRational hermite_value(HermiteConvention conv, unsigned n,
                                 const BigRational& u) {
  BigRational p0 = 1;
  if (n == 0) return p0;
  BigRational p1 = conv == HermiteConvention::Physicists ? 2 * u : u;
  for (unsigned k = 1; k < n; ++k) {
    const BigRational kk(static_cast<std::int64_t>(k));
    BigRational next;
    switch (conv) {
      case HermiteConvention::Combinatorial:
        next = u * p1 + kk * p0;
        break;
      case HermiteConvention::Probabilists:
        next = u * p1 - kk * p0;
        break;
      case HermiteConvention::Physicists:
        next = 2 * u * p1 - 2 * kk * p0;
        break;
    }
    p0 = p1;
    p1 = next;
  }
  return p1;
}

inline double hermite_value(HermiteConvention conv, unsigned n, double u) {
  double p0 = 1;
  if (n == 0) return p0;
  double p1 = conv == HermiteConvention::Physicists ? 2 * u : u;
  for (unsigned k = 1; k < n; ++k) {
    double next = 0;
    switch (conv) {
      case HermiteConvention::Combinatorial:
        next = u * p1 + k * p0;
        break;
      case HermiteConvention::Probabilists:
        next = u * p1 - k * p0;
        break;
      case HermiteConvention::Physicists:
        next = 2 * u * p1 - 2 * k * p0;
        break;
    }
    p0 = p1;
    p1 = next;
  }
  return p1;
}

// Higher-order Hermite polynomial of derivative order n and degree j:
// the image of x^j under e^{t d^n/dx^n}, i.e.
//   j! sum_{k=0}^{floor(j/n)} x^{j-nk} t^k / ((j-nk)! k!).
// Stored exactly in both variables so PDE residuals are exact zero checks.
struct GouldHopperPoly {
  unsigned deriv_order = 2;  // n
  unsigned degree = 0;       // j
  BivariatePoly poly;        // x-coefficients are polynomials in t
};

inline GouldHopperPoly gould_hopper(unsigned n, unsigned j) {
  if (n < 2) throw std::domain_error("gould_hopper: derivative order must be >= 2");
  std::vector<RationalPolynomial> x_coeffs(j + 1);
  const BigInt jfact = factorial(j);
  for (unsigned k = 0; n * k <= j; ++k) {
    const unsigned xdeg = j - n * k;
    const BigRational c(jfact, factorial(xdeg) * factorial(k));
    x_coeffs[xdeg] = RationalPolynomial::monomial(c, k);  // c * t^k at x^xdeg
  }
  GouldHopperPoly g;
  g.deriv_order = n;
  g.degree = j;
  g.poly = BivariatePoly(std::move(x_coeffs));
  return g;
}

// d/dt H - d^n/dx^n H, exact; identically zero for every Gould-Hopper
// polynomial.
inline BivariatePoly gould_hopper_pde_residual(unsigned n, unsigned j) {
  const GouldHopperPoly g = gould_hopper(n, j);
  return g.poly.derivative_t() - g.poly.derivative_x(n);
}

// H^{(n)}_j at t = 0; equals the monomial x^j.
inline RationalPolynomial gould_hopper_at_t0(unsigned n, unsigned j) {
  return gould_hopper(n, j).poly.eval_t(0);
}

// Derived heat polynomial: the n-th signed spatial derivative of the
// Gaussian kernel k(t,x) = (2 pi t)^{-1/2} e^{-x^2/(2t)},
//   (-1)^n d^n/dx^n k(t,x) = t^{-n/2} He_n(x/sqrt(t)) k(t,x)
// with He in the probabilists' convention.
inline double derived_heat_polynomial(unsigned n, double t, double x) {
  if (!(t > 0)) throw std::domain_error("derived_heat_polynomial: t must be > 0");
  const double kernel =
      std::exp(-x * x / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
  const double he =
      hermite_value(HermiteConvention::Probabilists, n, x / std::sqrt(t));
  return std::pow(t, -0.5 * static_cast<double>(n)) * he * kernel;
}

}  // namespace airyherm
