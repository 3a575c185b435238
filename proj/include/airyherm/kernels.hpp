#pragma once

#include "airyherm/gamma.hpp"
#include "airyherm/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace airyherm {

// Parameter bundle for the generalized dispersive-diffusive integrand
//   exp{ a (i lambda)^m t - s lambda^2 t / 2 + i lambda x }.
// Construction rejects combinations whose integrand grows: for even m the
// real part of a(i lambda)^m must not be positive, and with s*t = 0 an odd-m
// kernel is only defined through the rotated-contour path.
struct KernelParams {
  double a;
  int m;
  double s;
  double t;

  KernelParams(double a_, int m_, double s_, double t_)
      : a(a_), m(m_), s(s_), t(t_) {
    if (!(std::isfinite(a) && std::isfinite(s) && std::isfinite(t)))
      throw std::domain_error("KernelParams: non-finite parameter");
    if (m < 3) throw std::domain_error("KernelParams: order m must be >= 3");
    if (!(t > 0)) throw std::domain_error("KernelParams: t must be > 0");
    if (s < 0) throw std::domain_error("KernelParams: s must be >= 0");
    if (m % 2 == 0) {
      const double re_part = (m / 2) % 2 == 0 ? a : -a;  // a * Re(i^m)
      if (re_part > 0)
        throw std::domain_error(
            "KernelParams: even-order dispersion must not grow");
    } else if (s == 0 && a == 0) {
      throw std::domain_error("KernelParams: degenerate kernel (a = s = 0)");
    }
  }
};

// Dispersion coefficient that normalizes the order-m kernel: for odd m the
// phase becomes exp(i lambda^m / m), so m = 3 gives a = -1/3 and the classic
// Airy integral; for even m the damped unit with a (i lambda)^m = -lambda^m
// (m = 4 gives a = -1).
inline double canonical_dispersion(int m) {
  if (m < 3) throw std::domain_error("canonical_dispersion: m must be >= 3");
  if (m % 2 == 1) {
    // a * i^m = i/m  =>  a = (-1)^{(m-1)/2} / m
    return (((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / m;
  }
  // a * (-1)^{m/2} = -1
  return (m / 2) % 2 == 0 ? -1.0 : 1.0;
}

inline double heat_kernel(double variance, double x) {
  if (!(variance > 0))
    throw std::domain_error("heat_kernel: variance must be > 0");
  return std::exp(-x * x / (2.0 * variance)) /
         std::sqrt(2.0 * M_PI * variance);
}

// Smallest lambda with v lambda^2/2 + |beta| lambda^m >= -log(floor); the
// integrand's damping factor is below `floor` past this point.
inline double damping_cutoff(double abs_beta, int m, double v, double floor) {
  if (!(v > 0) && !(abs_beta > 0))
    throw std::domain_error("damping_cutoff: no damping present");
  const double target = -std::log(floor);
  auto damping = [&](double lam) {
    return 0.5 * v * lam * lam + abs_beta * std::pow(lam, m);
  };
  double hi = 1.0;
  while (damping(hi) < target) hi *= 2.0;
  double lo = hi * 0.5;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (damping(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

// (1/pi) Int_0^cutoff Re[exp(alpha (i lambda)^m - v lambda^2/2 + i lambda x)]
// d lambda.  Uses the Hermitian symmetry of the full-line integrand, so the
// result is real by construction.  Requires a damped regime: either v > 0 or
// a strictly decaying even-order term.
inline double fourier_kernel(double alpha, int m, double v, double x,
                             const QuadSpec& q = {}) {
  if (m < 2) throw std::domain_error("fourier_kernel: m must be >= 2");
  double re_im = 0, im_im = 0;  // i^m = re_im + i*im_im
  switch (m & 3) {
    case 0: re_im = 1; break;
    case 1: im_im = 1; break;
    case 2: re_im = -1; break;
    case 3: im_im = -1; break;
  }
  const double beta = alpha * re_im;   // real-exponent coefficient of lambda^m
  const double phase = alpha * im_im;  // oscillatory coefficient of lambda^m
  if (beta > 0)
    throw std::domain_error("fourier_kernel: growing integrand (beta > 0)");
  if (beta == 0 && !(v > 0))
    throw std::domain_error(
        "fourier_kernel: oscillatory regime needs the contour evaluation");
  const double cutoff = damping_cutoff(std::abs(beta), m, v, q.damping_floor);
  auto f = [&](double lam) {
    const double lam_m = std::pow(lam, m);
    return std::exp(beta * lam_m - 0.5 * v * lam * lam) *
           std::cos(phase * lam_m + lam * x);
  };
  return integrate_panels(f, 0.0, cutoff, q).value / M_PI;
}

namespace detail {

// Odd-order oscillatory kernel by rotating the integration ray to
// angle pi/(2m), where the phase exp(i lambda^m t / m) turns into the
// damping exp(-s^m t / m):
//   (1/pi) Re[ e^{i theta} Int_0^inf exp(-s^m t/m + i x s e^{i(pi/2+theta)}) ds ].
inline double contour_kernel_odd(int m, double t, double x,
                                 const QuadSpec& q) {
  const double theta = M_PI / (2.0 * m);
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);
  const double target = -std::log(q.damping_floor);

  // Real exponent -s^m t/m - x s sin(theta); find where its magnitude
  // guarantees the floor, doubling past any transient growth for x < 0.
  auto damping = [&](double s) {
    return std::pow(s, m) * t / m + x * s * sin_t;
  };
  double smax = 1.0;
  while (damping(smax) < target ||
         t * std::pow(smax, m - 1) < std::abs(x) * sin_t)
    smax *= 2.0;

  auto f = [&](double s) {
    const double re = -std::pow(s, m) * t / m - x * s * sin_t;
    const double im = x * s * cos_t;
    return std::exp(re) *
           std::complex<double>(std::cos(im), std::sin(im));
  };
  const std::complex<double> ray = integrate_panels(f, 0.0, smax, q).value;
  const std::complex<double> rot(std::cos(theta), std::sin(theta));
  return (rot * ray).real() / M_PI;
}

}  // namespace detail

// Fundamental solution of u_t = a d^m u / dx^m at time t:
//   (1/2 pi) Int exp(a (i lambda)^m t + i lambda x) d lambda.
// Odd m is pinned to the canonical dispersion coefficient (the rotated
// contour assumes phase +i lambda^m t/m); even m needs a strictly damped
// sign.
inline double fundamental_solution(int m, double a, double t, double x,
                                   const QuadSpec& q = {}) {
  if (m < 3)
    throw std::domain_error("fundamental_solution: m must be >= 3");
  if (!(t > 0)) throw std::domain_error("fundamental_solution: t must be > 0");
  if (m % 2 == 1) {
    const double canon = canonical_dispersion(m);
    if (std::abs(a - canon) > 1e-12 * std::max(1.0, std::abs(canon)))
      throw std::domain_error(
          "fundamental_solution: odd m requires the canonical dispersion "
          "coefficient");
    return detail::contour_kernel_odd(m, t, x, q);
  }
  const double beta = ((m / 2) % 2 == 0 ? a : -a);  // a * Re(i^m)
  if (!(beta < 0))
    throw std::domain_error(
        "fundamental_solution: even m requires a decaying kernel");
  return fourier_kernel(a * t, m, 0.0, x, q);
}

// Order-m Airy-type function: the t = 1 fundamental solution.
inline double higher_airy(int m, double a, double x, const QuadSpec& q = {}) {
  return fundamental_solution(m, a, 1.0, x, q);
}

// Ai(x) by its power series y'' = xy with
// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
// Accurate in doubles on roughly [-8, 4]; cancellation grows with x > 4.
inline double airy_series(double x) {
  const double c1 = std::pow(3.0, -2.0 / 3.0) / gamma_fn(2.0 / 3.0);
  const double c2 = std::pow(3.0, -1.0 / 3.0) / gamma_fn(1.0 / 3.0);
  const double x3 = x * x * x;
  // f = sum x^{3k} prod 1/((3j+2)(3j+3)), g = x * sum x^{3k} prod 1/((3j+3)(3j+4))
  double f_term = 1.0, g_term = x;
  double f = f_term, g = g_term;
  for (int k = 0; k < 400; ++k) {
    f_term *= x3 / ((3 * k + 2) * (3 * k + 3));
    g_term *= x3 / ((3 * k + 3) * (3 * k + 4));
    f += f_term;
    g += g_term;
    if (std::abs(f_term) + std::abs(g_term) <
        1e-20 * (std::abs(f) + std::abs(g)) + 1e-300)
      break;
  }
  return c1 * f - c2 * g;
}

inline double airy_contour(double x, const QuadSpec& q = {}) {
  return detail::contour_kernel_odd(3, 1.0, x, q);
}

// Airy function on the documented window |x| <= 8, evaluated by both the
// power series and the rotated contour; the two must agree to 1e-9 relative
// on the overlap [-2, 4].
inline double airy(double x, const QuadSpec& q = {}) {
  if (!(std::abs(x) <= 8.0))
    throw std::domain_error("airy: |x| <= 8 validity window");
  const double contour = airy_contour(x, q);
  if (x > 4.0) return contour;  // series cancellation too large past 4
  const double series = airy_series(x);
  if (x >= -2.0) {
    const double scale = std::max(std::abs(contour), 1e-300);
    if (std::abs(series - contour) > 1e-9 * scale)
      throw std::runtime_error("airy: dual-method cross-check failed");
  }
  return series;
}

// Solution of u_t = a d^m u/dx^m + (s/2) u_xx with unit initial spectrum:
//   (1/pi) Int_0^inf Re[exp(a (i lambda)^m t - s lambda^2 t/2 + i lambda x)].
// Gaussian-damped regime only (s t > 0).
inline double airy_heat(const KernelParams& p, double x,
                        const QuadSpec& q = {}) {
  if (!(p.s * p.t > 0))
    throw std::domain_error("airy_heat: requires s*t > 0");
  return fourier_kernel(p.a * p.t, p.m, p.s * p.t, x, q);
}

// Int_{-window}^{window} f(y) g(x - y) dy.
inline double convolve(const std::function<double(double)>& f,
                       const std::function<double(double)>& g, double x,
                       double window, const QuadSpec& q = {}) {
  auto integrand = [&](double y) { return f(y) * g(x - y); };
  return integrate_panels(integrand, -window, window, q).value;
}

// Quadrature form of the n-th derived heat polynomial:
//   (1/2 pi) Int exp(i lambda x - lambda^2 t/2) (-i lambda)^n d lambda
// reduced to the half line; (-i)^n selects the trig factor and sign.
inline double derived_heat_quadrature(unsigned n, double t, double x,
                                      const QuadSpec& q = {}) {
  if (!(t > 0))
    throw std::domain_error("derived_heat_quadrature: t must be > 0");
  const double target = -std::log(q.damping_floor);
  auto damping = [&](double lam) {
    return 0.5 * t * lam * lam - n * std::log(std::max(lam, 1.0));
  };
  double cutoff = 1.0;
  while (damping(cutoff) < target) cutoff *= 2.0;

  auto f = [&](double lam) {
    const double amp = std::exp(-0.5 * t * lam * lam) * std::pow(lam, n);
    switch (n & 3) {
      case 0: return amp * std::cos(lam * x);
      case 1: return amp * std::sin(lam * x);
      case 2: return -amp * std::cos(lam * x);
      default: return -amp * std::sin(lam * x);
    }
  };
  return integrate_panels(f, 0.0, cutoff, q).value / M_PI;
}

}  // namespace airyherm
