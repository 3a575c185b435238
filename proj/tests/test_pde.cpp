#include "airyherm/pde.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>

using namespace airyherm;

TEST_CASE("residual of an exact exponential solution") {
  // u = exp{(a l^m + s l^2/2) t + l x} solves u_t = a u^(m) + (s/2) u''.
  const double lam = 0.5, a = 1.0, s = 1.0;
  const KernelParams p(a, 3, s, 1.0);
  const FieldProbe probe = make_probe(
      [&](double t, double x) {
        return std::exp((a * lam * lam * lam + 0.5 * s * lam * lam) * t +
                        lam * x);
      },
      3);
  CHECK(residual_fd(probe, p, 0.7, 0.3) < 1e-6);
  CHECK(residual_fd(probe, p, 1.4, -1.1) < 1e-6);
}

TEST_CASE("residual of the heat kernel with a = 0") {
  const KernelParams p(0.0, 3, 1.0, 1.0);
  const FieldProbe probe = make_probe(
      [](double t, double x) { return heat_kernel(t, x); }, 3);
  CHECK(residual_fd(probe, p, 1.0, 0.5) < 1e-6);
}

TEST_CASE("residual of the quadrature-evaluated kernel field") {
  QuadSpec tight;
  tight.rel_tol = 1e-12;
  const KernelParams p(-1.0 / 3.0, 3, 1.0, 1.0);
  const FieldProbe probe = make_probe(
      [&](double t, double x) {
        return airy_heat(KernelParams(p.a, p.m, p.s, t), x, tight);
      },
      3);
  CHECK(residual_fd(probe, p, 1.0, 0.5) < 1e-4);
}

TEST_CASE("probe failures name the stencil point") {
  const KernelParams p(-1.0 / 3.0, 3, 1.0, 1.0);
  const FieldProbe probe = make_probe(
      [](double t, double x) {
        return x > 0.505 ? std::numeric_limits<double>::quiet_NaN() : x + t;
      },
      3);
  CHECK_THROWS_WITH(residual_fd(probe, p, 1.0, 0.5),
                    Catch::Matchers::ContainsSubstring("non-finite"));
}

TEST_CASE("characteristic roots: cube roots of unity") {
  const auto roots = characteristic_roots(3, 1.0, 0.0, 1.0);
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots)
    CHECK(std::abs(std::pow(r, 3) - 1.0) < 1e-10);
}

TEST_CASE("characteristic roots: quadratic collapse") {
  // (1/2) r^2 + (1/2) r^2 = 2  =>  r = +-sqrt(2)
  const auto roots = characteristic_roots(2, 0.5, 1.0, 2.0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == Catch::Approx(-std::sqrt(2.0)).epsilon(1e-10));
  CHECK(roots[1].real() == Catch::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(std::abs(roots[0].imag()) < 1e-10);
}

TEST_CASE("characteristic roots certify small residuals") {
  const double a = 1.0, s = 1.0, lam = 0.7;
  const auto roots = characteristic_roots(5, a, s, lam);
  REQUIRE(roots.size() == 5);
  for (const auto& r : roots) {
    const std::complex<double> val =
        a * std::pow(r, 5) + 0.5 * s * r * r - lam;
    CHECK(std::abs(val) < 1e-10);
  }
}

TEST_CASE("Vieta relations on the sparse characteristic polynomial") {
  for (int m : {3, 4, 5, 6}) {
    const double a = 0.8, s = 1.3, lam = 0.9;
    const auto roots = characteristic_roots(m, a, s, lam);
    std::complex<double> sum = 0, prod = 1;
    for (const auto& r : roots) {
      sum += r;
      prod *= r;
    }
    CHECK(std::abs(sum) < 1e-9);
    const double expected = (m % 2 == 0 ? 1.0 : -1.0) * (-lam / a);
    CHECK(std::abs(prod - expected) < 1e-9);
  }
}

TEST_CASE("separated solutions from the roots solve the PDE") {
  const double a = 1.0, s = 0.5, lam = 0.8;
  const int m = 3;
  const auto roots = characteristic_roots(m, a, s, lam);
  const KernelParams p(a, m, s, 1.0);
  for (const auto& r : roots) {
    const FieldProbe probe = make_probe(
        [&](double t, double x) {
          const std::complex<double> rx(r.real() * x, r.imag() * x);
          return (std::exp(lam * t) * std::exp(rx)).real();
        },
        m);
    CHECK(residual_fd(probe, p, 0.4, 0.2) < 1e-6);
  }
}

TEST_CASE("cube completion limiting and interior cases") {
  // t -> 0 proxy: both sides approach Ai(x)
  const CaseResult near_zero = verify_cube_completion(1e-3, 1.0, {}, 1e-5);
  CHECK(near_zero.pass);

  const CaseResult interior = verify_cube_completion(1.0, 0.0, {}, 1e-8);
  CHECK(interior.pass);
}

TEST_CASE("time-scaled closed form") {
  // t = 1 reduces to cube completion with s in the diffusion slot
  CHECK(verify_eq10(1.0, 0.5, 0.3).pass);
  CHECK(verify_cube_completion(0.5, 0.3).pass);

  CHECK(verify_eq10(2.0, 0.5, 0.3).pass);

  // s = 0 reduces to the scaling law
  CHECK(verify_eq10(2.0, 0.0, 0.4).pass);
}

TEST_CASE("scaling law cases") {
  const CaseResult identity = verify_scaling(3, 1.0, 1.0, {}, 1e-12);
  CHECK(identity.pass);
  CHECK(identity.metric == 0.0);

  CHECK(verify_scaling(3, 8.0, 1.0).pass);
  CHECK(verify_scaling(4, 16.0, 0.0).pass);
}

TEST_CASE("verification errors shrink as quadrature tightens") {
  QuadSpec loose;
  loose.rel_tol = 1e-4;
  QuadSpec tight;
  tight.rel_tol = 1e-5;
  const double e_loose = verify_cube_completion(0.5, 0.7, loose).metric;
  const double e_tight = verify_cube_completion(0.5, 0.7, tight).metric;
  CHECK(e_tight <= e_loose + 1e-12);
}

TEST_CASE("kernel moments against Gould-Hopper values") {
  // j = 0: kernel mass is 1
  const CaseResult mass = moment_identity(4, -1.0, 0, 1.0, 0.0, {}, 1e-8);
  CHECK(mass.pass);

  // j < m: plain monomial, no kernel-dependent term
  const CaseResult mono = moment_identity(4, -1.0, 2, 0.5, 0.7, {}, 1e-5);
  CHECK(mono.pass);

  // spec spot value: x^4 + 24 a t = -12 at x = 0, t = 0.5
  const double exact = gould_hopper(4, 4).poly.eval(-0.5, 0.0);
  CHECK(exact == -12.0);
  CHECK(moment_identity(4, -1.0, 4, 0.5, 0.0, {}, 1e-5).pass);

  CHECK_THROWS_AS(moment_identity(3, -1.0, 2, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(moment_identity(4, -1.0, 9, 1.0, 0.0), std::domain_error);
}

TEST_CASE("duality scan: leading term dominates for huge tau") {
  DualityScan scan;
  scan.m = 4;
  scan.tau = 1e4;
  scan.t = 1.0;
  scan.x = 0.5;
  scan.j_max = 0;
  scan = duality_partial_sums(scan);
  REQUIRE(scan.errors.size() == 1);
  CHECK(scan.errors[0] <= 1e-2 * std::abs(scan.oracle));
}

TEST_CASE("duality scan records the error curve") {
  DualityScan scan;
  scan.m = 4;
  scan.tau = 50.0;
  scan.t = 1.0;
  scan.x = 0.5;
  scan.j_max = 4;
  scan = duality_partial_sums(scan);
  REQUIRE(scan.errors.size() == 5);
  REQUIRE(scan.partial_sums.size() == 5);
  CHECK(scan.optimal_index >= 0);
  CHECK(scan.optimal_index <= 4);
  CHECK(scan.errors[scan.optimal_index] <= scan.errors[0]);
  CHECK(std::isfinite(scan.oracle));
}
