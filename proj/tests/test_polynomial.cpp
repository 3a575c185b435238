#include "airyherm/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace airyherm;

namespace {

RationalPolynomial from_ints(std::vector<std::int64_t> v) {
  std::vector<BigRational> c;
  for (auto x : v) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(from_ints({1, 2, 0, 0}).degree() == 1);
  CHECK(from_ints({0, 0}).is_zero());
  CHECK(RationalPolynomial().degree() == -1);
  CHECK(from_ints({5}).degree() == 0);
}

TEST_CASE("arithmetic and evaluation") {
  const auto p = from_ints({1, 0, 1});   // 1 + u^2
  const auto q = from_ints({0, 1});      // u
  CHECK((p + q) == from_ints({1, 1, 1}));
  CHECK((p * q) == from_ints({0, 1, 0, 1}));
  CHECK((p - p).is_zero());
  CHECK(p.eval(make_rational(1, 2)) == make_rational(5, 4));
  CHECK(p.eval(2.0) == 5.0);
  CHECK((BigRational(3) * q) == from_ints({0, 3}));
}

TEST_CASE("derivative") {
  const auto p = from_ints({7, 0, 3, 2});  // 7 + 3u^2 + 2u^3
  CHECK(p.derivative() == from_ints({0, 6, 6}));
  CHECK(from_ints({5}).derivative().is_zero());
}

TEST_CASE("bivariate derivatives and evaluation") {
  // P(t, x) = x^3 + 6 t  (x-coefficients: [6t, 0, 0, 1])
  std::vector<RationalPolynomial> xc(4);
  xc[0] = RationalPolynomial::monomial(6, 1);
  xc[3] = RationalPolynomial::constant(1);
  const BivariatePoly p(std::move(xc));

  CHECK(p.degree_x() == 3);
  CHECK(p.derivative_t() ==
        BivariatePoly(std::vector<RationalPolynomial>{
            RationalPolynomial::constant(6)}));
  // d^3/dx^3 (x^3 + 6t) = 6
  CHECK(p.derivative_x(3) ==
        BivariatePoly(std::vector<RationalPolynomial>{
            RationalPolynomial::constant(6)}));
  CHECK((p.derivative_t() - p.derivative_x(3)).is_zero());

  CHECK(p.eval_t(0) == RationalPolynomial::monomial(1, 3));
  CHECK(p.eval(2.0, 1.0) == 13.0);
}

TEST_CASE("bivariate zero handling") {
  CHECK(BivariatePoly().is_zero());
  CHECK(BivariatePoly().derivative_x(5).is_zero());
  std::vector<RationalPolynomial> xc(2);
  xc[1] = RationalPolynomial::constant(1);
  const BivariatePoly x_poly(std::move(xc));
  CHECK(x_poly.derivative_x(2).is_zero());
}
