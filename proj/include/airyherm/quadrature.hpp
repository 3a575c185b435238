#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace airyherm {

// Controls for the panel-doubling Gauss-Legendre integrators.
//   rel_tol       target relative error between successive refinements
//   max_doublings panel-doubling cap (up to 2^max_doublings panels)
//   damping_floor integration domains are cut where the damping factor of
//                 the integrand drops below this value
struct QuadSpec {
  double rel_tol = 1e-10;
  int max_doublings = 20;
  double damping_floor = 1e-18;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double last, double previous)
      : std::runtime_error(msg + " (last=" + std::to_string(last) +
                           ", previous=" + std::to_string(previous) + ")"),
        last_estimate(last),
        previous_estimate(previous) {}
  double last_estimate;
  double previous_estimate;
};

namespace detail {

// 32-point Gauss-Legendre rule on [-1,1], nodes by Newton iteration on the
// Legendre recurrence.  Computed once; fully deterministic.
struct GaussLegendre32 {
  std::array<double, 32> nodes{};
  std::array<double, 32> weights{};

  GaussLegendre32() {
    constexpr int n = 32;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes[i] = -x;
      nodes[n - 1 - i] = x;
      weights[i] = w;
      weights[n - 1 - i] = w;
    }
  }
};

inline const GaussLegendre32& gl32() {
  static const GaussLegendre32 rule;
  return rule;
}

template <class T>
double magnitude(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>)
    return std::abs(v);
  else
    return std::abs(static_cast<double>(v));
}

}  // namespace detail

template <class T>
struct QuadResult {
  T value{};
  double error_estimate = 0;
  int panels = 0;
};

// Composite 32-point Gauss-Legendre over [a,b] with panel doubling until two
// successive estimates agree to rel_tol.  The absolute floor keeps the
// stopping rule meaningful when the integral cancels to far below the size
// of the integrand (noise is bounded by eps * integral of |f|).
template <class F>
auto integrate_panels(F&& f, double a, double b, const QuadSpec& q)
    -> QuadResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  const auto& rule = detail::gl32();

  auto pass = [&](int panels, double& l1) {
    T total{};
    l1 = 0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * h;
      for (int i = 0; i < 32; ++i) {
        const T fv = f(mid + 0.5 * h * rule.nodes[i]);
        total += (0.5 * h * rule.weights[i]) * fv;
        l1 += 0.5 * h * rule.weights[i] * detail::magnitude(fv);
      }
    }
    return total;
  };

  double l1 = 0;
  T before_prev{};
  T prev = pass(1, l1);
  int panels = 1;
  for (int d = 0; d < q.max_doublings; ++d) {
    panels *= 2;
    const T cur = pass(panels, l1);
    const double diff = detail::magnitude(T(cur - prev));
    const double floor = 8 * std::numeric_limits<double>::epsilon() * l1;
    if (diff <= q.rel_tol * detail::magnitude(cur) + floor)
      return {cur, diff, panels};
    before_prev = prev;
    prev = cur;
  }
  throw QuadratureError("integrate_panels: no convergence within panel cap",
                        detail::magnitude(prev),
                        detail::magnitude(before_prev));
}

}  // namespace airyherm
