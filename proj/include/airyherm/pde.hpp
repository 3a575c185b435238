#pragma once

#include "airyherm/hermite.hpp"
#include "airyherm/kernels.hpp"
#include "airyherm/report.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace airyherm {

// A scalar field u(t, x) probed by finite differences.
struct FieldProbe {
  std::function<double(double, double)> evaluator;
  double t_step = 1e-4;
  double x_step = 1e-2;
};

// Step sizes sized so FD truncation error stays below the residual
// acceptance bars for the given derivative order.
inline FieldProbe make_probe(std::function<double(double, double)> f, int m) {
  FieldProbe p;
  p.evaluator = std::move(f);
  p.x_step = m <= 4 ? 1e-2 : 2.5e-2;
  return p;
}

namespace detail {

// Central-difference weights for the m-th derivative, second-order accurate:
// repeated [1,-2,1] convolutions, composed with the antisymmetric first
// difference when m is odd.  Offsets run -r..r with r = (m+1)/2.
inline std::vector<double> central_diff_weights(int m) {
  std::vector<double> w{1.0};
  auto convolve3 = [](const std::vector<double>& a, double c0, double c1,
                      double c2) {
    std::vector<double> out(a.size() + 2, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] += a[i] * c0;
      out[i + 1] += a[i] * c1;
      out[i + 2] += a[i] * c2;
    }
    return out;
  };
  for (int i = 0; i < m / 2; ++i) w = convolve3(w, 1.0, -2.0, 1.0);
  if (m % 2 == 1) w = convolve3(w, -0.5, 0.0, 0.5);
  return w;
}

}  // namespace detail

// |d_t u - a d_x^m u - (s/2) d_x^2 u| by central differences with one
// Richardson halving step in x.  Probe failures (NaN/overflow) surface as
// errors naming the offending stencil point.
inline double residual_fd(const FieldProbe& probe, const KernelParams& p,
                          double t, double x) {
  auto eval = [&](double tt, double xx) {
    const double v = probe.evaluator(tt, xx);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "residual_fd: probe non-finite at (t,x)=(" << tt << "," << xx
         << ")";
      throw std::runtime_error(os.str());
    }
    return v;
  };

  const double ht = probe.t_step;
  const double du_dt = (eval(t + ht, x) - eval(t - ht, x)) / (2.0 * ht);

  auto deriv_x = [&](int order, double h) {
    const std::vector<double> w = detail::central_diff_weights(order);
    const int r = static_cast<int>(w.size() - 1) / 2;
    double acc = 0;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      if (w[i] == 0.0) continue;
      acc += w[i] * eval(t, x + (i - r) * h);
    }
    return acc / std::pow(h, order);
  };
  auto richardson = [&](int order, double h) {
    return (4.0 * deriv_x(order, 0.5 * h) - deriv_x(order, h)) / 3.0;
  };

  const double d2 = richardson(2, probe.x_step);
  const double dm = richardson(p.m, probe.x_step);
  return std::abs(du_dt - p.a * dm - 0.5 * p.s * d2);
}

// All m roots of a r^m + (s/2) r^2 - lambda = 0 by Durand-Kerner
// simultaneous iteration, started from perturbed scaled roots of unity.
inline std::vector<std::complex<double>> characteristic_roots(
    int m, double a, double s, double lambda_sep) {
  if (m < 2) throw std::domain_error("characteristic_roots: m must be >= 2");
  if (a == 0) throw std::domain_error("characteristic_roots: a must be nonzero");
  using C = std::complex<double>;

  // Monic coefficients c_0..c_m, c_m = 1.
  std::vector<double> c(m + 1, 0.0);
  c[m] = 1.0;
  c[2] += 0.5 * s / a;
  c[0] += -lambda_sep / a;

  auto eval_monic = [&](C r) {
    C acc = 0;
    for (int k = m; k >= 0; --k) acc = acc * r + c[k];
    return acc;
  };

  double radius = 0;  // Cauchy bound
  for (int k = 0; k < m; ++k) radius = std::max(radius, std::abs(c[k]));
  radius += 1.0;

  std::vector<C> z(m);
  for (int k = 0; k < m; ++k) {
    const double ang = 2.0 * M_PI * k / m + 0.5;  // offset breaks symmetry
    z[k] = radius * C(std::cos(ang), std::sin(ang));
  }

  bool converged = false;
  for (int sweep = 0; sweep < 200 && !converged; ++sweep) {
    double max_step = 0;
    for (int k = 0; k < m; ++k) {
      C denom = 1;
      for (int j = 0; j < m; ++j)
        if (j != k) denom *= z[k] - z[j];
      const C delta = eval_monic(z[k]) / denom;
      z[k] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    converged = max_step < 1e-13 * (1.0 + radius);
  }

  double worst = 0;
  for (const C& r : z) {
    const C val = a * eval_monic(r);  // back to the original polynomial
    worst = std::max(worst, std::abs(val));
  }
  if (!converged || worst >= 1e-10 * (1.0 + std::abs(lambda_sep))) {
    std::ostringstream os;
    os << "characteristic_roots: iteration did not certify roots (max "
          "|p(r)| = "
       << worst << ")";
    throw std::runtime_error(os.str());
  }

  std::sort(z.begin(), z.end(), [](const C& u, const C& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return z;
}

namespace detail {

inline std::string fmt_param(double v) { return format_sig17(v); }

inline double ipow(double base, unsigned e) {
  double r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

// Cube completion: the Gaussian-damped cubic-phase integral
//   (1/2 pi) Int exp(i lambda^3/3 - lambda^2 t/2 + i lambda x) d lambda
// against its closed form e^{t^3/12 + t x/2} Ai(x + t^2/4).
inline CaseResult verify_cube_completion(double t, double x,
                                         const QuadSpec& q = {},
                                         double tol = 1e-7) {
  if (!(t > 0)) throw std::domain_error("verify_cube_completion: t must be > 0");
  const double arg = x + 0.25 * t * t;
  const double lhs = fourier_kernel(-1.0 / 3.0, 3, t, x, q);
  const double rhs = std::exp(t * t * t / 12.0 + 0.5 * t * x) * airy(arg, q);
  std::ostringstream name;
  name << "cube_t" << t << "_x" << x;
  return make_case(name.str(),
                   {{"t", detail::fmt_param(t)}, {"x", detail::fmt_param(x)}},
                   relative_error(lhs, rhs), tol);
}

// Time-scaled variant: (1/2 pi) Int exp((i lambda^3/3 - s lambda^2/2) t
// + i lambda x) d lambda against
// e^{s^3 t/12 + s x/2} t^{-1/3} Ai(t^{-1/3} x + s^2 t^{2/3}/4).
inline CaseResult verify_eq10(double t, double s, double x,
                              const QuadSpec& q = {}, double tol = 1e-6) {
  if (!(t > 0)) throw std::domain_error("verify_eq10: t must be > 0");
  if (s < 0) throw std::domain_error("verify_eq10: s must be >= 0");
  const double t13 = std::cbrt(t);
  const double arg = x / t13 + 0.25 * s * s * t13 * t13;
  const double lhs = s > 0 ? fourier_kernel(-t / 3.0, 3, s * t, x, q)
                           : fundamental_solution(3, -1.0 / 3.0, t, x, q);
  const double rhs =
      std::exp(s * s * s * t / 12.0 + 0.5 * s * x) / t13 * airy(arg, q);
  std::ostringstream name;
  name << "eq10_t" << t << "_s" << s << "_x" << x;
  return make_case(name.str(),
                   {{"s", detail::fmt_param(s)},
                    {"t", detail::fmt_param(t)},
                    {"x", detail::fmt_param(x)}},
                   relative_error(lhs, rhs), tol);
}

// Self-similar scaling of the order-m kernel: the time-t fundamental
// solution equals t^{-1/m} K_m(x t^{-1/m}).
inline CaseResult verify_scaling(int m, double t, double x,
                                 const QuadSpec& q = {}, double tol = 1e-6) {
  const double a = canonical_dispersion(m);
  const double tm = std::pow(t, 1.0 / m);
  const double lhs = fundamental_solution(m, a, t, x, q);
  const double rhs = higher_airy(m, a, x / tm, q) / tm;
  std::ostringstream name;
  name << "scaling_m" << m << "_t" << t << "_x" << x;
  return make_case(name.str(),
                   {{"m", std::to_string(m)},
                    {"t", detail::fmt_param(t)},
                    {"x", detail::fmt_param(x)}},
                   relative_error(lhs, rhs), tol);
}

// Moment identity for damped even-order kernels:
//   Int y^j w_m(t, x - y) dy = H^{(m)}_j(a t, x).
// Quadrature in the self-similar variable with window doubling until the
// tail shells stop contributing.
inline CaseResult moment_identity(int m, double a, int j, double t, double x,
                                  const QuadSpec& q = {}, double tol = 1e-5) {
  if (m < 4 || m % 2 != 0)
    throw std::domain_error("moment_identity: m must be even and >= 4");
  if (j < 0 || j > 8)
    throw std::domain_error("moment_identity: j must be in [0, 8]");
  if (!(t > 0)) throw std::domain_error("moment_identity: t must be > 0");

  const double exact =
      gould_hopper(static_cast<unsigned>(m), static_cast<unsigned>(j))
          .poly.eval(a * t, x);

  const double tm = std::pow(t, 1.0 / m);
  auto integrand = [&](double z) {
    return detail::ipow(x - tm * z, static_cast<unsigned>(j)) *
           fundamental_solution(m, a, 1.0, z, q);
  };
  double window = 8.0;
  double prev = integrate_panels(integrand, -window, window, q).value;
  double value = prev;
  bool settled = false;
  while (window <= 512.0) {
    window *= 2.0;
    value = integrate_panels(integrand, -window, window, q).value;
    if (std::abs(value - prev) <=
        q.rel_tol * std::abs(value) + 1e-12 * (1.0 + std::abs(value))) {
      settled = true;
      break;
    }
    prev = value;
  }
  if (!settled)
    throw QuadratureError("moment_identity: window doubling did not settle",
                          value, prev);

  std::ostringstream name;
  name << "moment_m" << m << "_j" << j << "_t" << t << "_x" << x;
  return make_case(name.str(),
                   {{"a", detail::fmt_param(a)},
                    {"j", std::to_string(j)},
                    {"m", std::to_string(m)},
                    {"t", detail::fmt_param(t)},
                    {"x", detail::fmt_param(x)}},
                   std::abs(value - exact), tol);
}

// Partial sums of the Gaussian-moment expansion of the smoothed order-m
// kernel, against the convolution oracle.  The expansion is asymptotic (the
// interchange behind it is only symbolic), so the per-J error curve and the
// optimal truncation index are the recorded evidence.
struct DualityScan {
  int m = 4;
  double t = 1.0;
  double tau = 50.0;
  double x = 0.5;
  int j_max = 8;
  double a = 0.0;  // dispersion coefficient; canonical for m when 0

  std::vector<double> partial_sums;
  std::vector<double> errors;
  double oracle = 0.0;
  int optimal_index = 0;
};

inline DualityScan duality_partial_sums(DualityScan scan,
                                        const QuadSpec& q = {}) {
  if (!(scan.tau > 0) || !(scan.t > 0))
    throw std::domain_error("duality_partial_sums: tau and t must be > 0");
  if (scan.j_max < 0 || scan.j_max > 16)
    throw std::domain_error("duality_partial_sums: j_max out of range");
  if (scan.a == 0.0) scan.a = canonical_dispersion(scan.m);

  auto gauss = [&](double y) { return heat_kernel(scan.tau, y); };
  auto kernel = [&](double y) {
    return fundamental_solution(scan.m, scan.a, scan.t, y, q);
  };
  const double window = 12.0 * std::sqrt(scan.tau) + std::abs(scan.x);
  scan.oracle = convolve(gauss, kernel, scan.x, window, q);

  const double prefactor = 1.0 / std::sqrt(2.0 * M_PI * scan.tau);
  scan.partial_sums.assign(scan.j_max + 1, 0.0);
  scan.errors.assign(scan.j_max + 1, 0.0);
  double sum = 0.0;
  double coeff = 1.0;  // (-1/(2 tau))^j / j!
  for (int j = 0; j <= scan.j_max; ++j) {
    if (j > 0) coeff *= -1.0 / (2.0 * scan.tau * j);
    const double h2j =
        gould_hopper(static_cast<unsigned>(scan.m),
                     static_cast<unsigned>(2 * j))
            .poly.eval(scan.a * scan.t, scan.x);
    sum += coeff * h2j;
    scan.partial_sums[j] = prefactor * sum;
    scan.errors[j] = std::abs(scan.partial_sums[j] - scan.oracle);
  }
  scan.optimal_index = 0;
  for (int j = 1; j <= scan.j_max; ++j)
    if (scan.errors[j] < scan.errors[scan.optimal_index])
      scan.optimal_index = j;
  return scan;
}

}  // namespace airyherm
