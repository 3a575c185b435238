#include "airyherm/rational.hpp"
#include "airyherm/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace airyherm;

namespace {

TruncatedSeries from_ints(std::vector<std::int64_t> v) {
  std::vector<BigRational> c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

// Catalan numbers by the convolution recurrence; test-side oracle kept
// independent of the library paths under test.
std::vector<BigRational> catalan_oracle(std::size_t n) {
  std::vector<BigRational> c(n, BigRational(0));
  if (n > 0) c[0] = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    BigRational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += c[i] * c[k - i];
    c[k + 1] = acc;
  }
  return c;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order,
                              bool unit_constant = false,
                              bool zero_constant = false) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  std::vector<BigRational> c(order);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  if (unit_constant) c[0] = 1;
  if (zero_constant) c[0] = 0;
  return TruncatedSeries(std::move(c));
}

void check_canonical(const TruncatedSeries& s) {
  for (std::size_t k = 0; k < s.order(); ++k) CHECK(is_canonical(s[k]));
}

}  // namespace

TEST_CASE("series multiplication") {
  const auto one_plus = from_ints({1, 1, 0});
  const auto one_minus = from_ints({1, -1, 0});
  CHECK(one_plus * one_minus == from_ints({1, 0, -1}));

  // geometric series times (1 - z) telescopes to 1
  const auto geo = from_ints({1, 1, 1, 1, 1});
  const auto lin = from_ints({1, -1, 0, 0, 0});
  CHECK(geo * lin == from_ints({1, 0, 0, 0, 0}));

  // mixed orders truncate to the minimum
  CHECK((from_ints({1, 2, 3}) * from_ints({1, 1})).order() == 2);
}

TEST_CASE("Catalan functional equation C^2 == (C-1)/z") {
  const TruncatedSeries c = TruncatedSeries(catalan_oracle(8));
  const TruncatedSeries lhs = c * c;                       // order 8
  const TruncatedSeries rhs = shift_div(c - BigRational(1), 1);  // order 7
  CHECK(truncate(lhs, 7) == rhs);
}

TEST_CASE("series division") {
  const auto one = TruncatedSeries::one(4);
  const auto one_minus_z = from_ints({1, -1, 0, 0});
  CHECK(div(one, one_minus_z) == from_ints({1, 1, 1, 1}));

  CHECK(div(from_ints({0, 1, 1, 0}), from_ints({1, 1, 0, 0})) ==
        from_ints({0, 1, 0, 0}));

  CHECK_THROWS_AS(div(one, TruncatedSeries::variable(4)), std::domain_error);
}

TEST_CASE("division by (1-6wz)^3 round-trips under multiplication") {
  // w at u = 1 from the Catalan oracle: w = C(3z), coefficients 3^k Cat_k.
  const auto cat = catalan_oracle(6);
  std::vector<BigRational> wc(6);
  BigRational p3 = 1;
  for (std::size_t k = 0; k < 6; ++k) {
    wc[k] = cat[k] * p3;
    p3 *= 3;
  }
  const TruncatedSeries w(wc);
  const TruncatedSeries z = TruncatedSeries::variable(6);
  const TruncatedSeries d = TruncatedSeries::one(6) - w * z * BigRational(6);
  const TruncatedSeries d3 = d * d * d;
  const TruncatedSeries num = z * z * BigRational(54);
  const TruncatedSeries q = div(num, d3);
  CHECK(q * d3 == num);  // multiply-back oracle
  check_canonical(q);
}

TEST_CASE("shift_div") {
  CHECK(shift_div(from_ints({0, 1, 1}), 1) == from_ints({1, 1}));
  CHECK(shift_div(from_ints({0, 0, 1}), 2) == from_ints({1}));
  CHECK_THROWS_AS(shift_div(from_ints({1, 1}), 1), std::domain_error);
  CHECK_THROWS_AS(shift_div(from_ints({0, 1}), 3), std::domain_error);
}

TEST_CASE("Catalan-style shift: (1 - sqrt(1-12z))/(6z)") {
  const std::size_t n = 6;
  const TruncatedSeries radicand =
      TruncatedSeries::one(n) - TruncatedSeries::variable(n) * BigRational(12);
  const TruncatedSeries w =
      shift_div(TruncatedSeries::one(n) - sqrt(radicand), 1) *
      make_rational(1, 6);
  // oracle: 3^k Cat_k = 1, 3, 18, 135, 1134
  const auto cat = catalan_oracle(5);
  REQUIRE(w.order() == 5);
  BigRational p3 = 1;
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(w[k] == cat[k] * p3);
    p3 *= 3;
  }
}

TEST_CASE("series square root") {
  // binomial-series oracle for sqrt(1 - 4z): coefficient k is
  // (1/2 choose k) (-4)^k
  const std::size_t n = 5;
  const TruncatedSeries s =
      sqrt(TruncatedSeries::one(n) - TruncatedSeries::variable(n) * BigRational(4));
  BigRational m4 = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // (1/2 choose k) = (1/2)(1/2-1)...(1/2-k+1)/k!
    BigRational choose = 1;
    for (std::size_t i = 0; i < k; ++i)
      choose *= (make_rational(1, 2) - BigRational(static_cast<int>(i))) /
                BigRational(static_cast<int>(i + 1));
    CHECK(s[k] == choose * m4);
    m4 *= -4;
  }
  CHECK(s == from_ints({1, -2, -2, -4, -10}));

  CHECK(sqrt(TruncatedSeries::one(3)) == TruncatedSeries::one(3));
  CHECK_THROWS_AS(sqrt(from_ints({2, 1})), std::domain_error);
}

TEST_CASE("sqrt squared reproduces the input (property)") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedSeries a = random_series(rng, 10, /*unit_constant=*/true);
    const TruncatedSeries s = sqrt(a);
    CHECK(s * s == a);
    check_canonical(s);
  }
}

TEST_CASE("series exponential") {
  const TruncatedSeries e = exp(TruncatedSeries::variable(4));
  CHECK(e[0] == 1);
  CHECK(e[1] == 1);
  CHECK(e[2] == make_rational(1, 2));
  CHECK(e[3] == make_rational(1, 6));
  CHECK_THROWS_AS(exp(from_ints({1, 1})), std::domain_error);
}

TEST_CASE("exp group law and inverse (property)") {
  std::mt19937_64 rng(1213);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedSeries a = random_series(rng, 10, false, /*zero_constant=*/true);
    const TruncatedSeries b = random_series(rng, 10, false, true);
    CHECK(exp(a) * exp(-a) == TruncatedSeries::one(10));
    CHECK(exp(a + b) == exp(a) * exp(b));
    check_canonical(exp(a));
  }
}

TEST_CASE("series composition") {
  const std::size_t n = 7;
  const TruncatedSeries geo = div(
      TruncatedSeries::one(n),
      TruncatedSeries::one(n) - TruncatedSeries::variable(n));
  const TruncatedSeries z2 =
      TruncatedSeries::variable(n) * TruncatedSeries::variable(n);
  CHECK(compose(geo, z2) == from_ints({1, 0, 1, 0, 1, 0, 1}));

  // C(3z) from the Catalan oracle
  const TruncatedSeries c = TruncatedSeries(catalan_oracle(4));
  const TruncatedSeries three_z = TruncatedSeries::variable(4) * BigRational(3);
  CHECK(compose(c, three_z) == from_ints({1, 3, 18, 135}));

  CHECK(compose(c, TruncatedSeries::zero(4)) ==
        TruncatedSeries::constant(1, 4));
  CHECK_THROWS_AS(compose(c, from_ints({1, 1, 0, 0})), std::domain_error);
}

TEST_CASE("multiplication is commutative and associative (property)") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedSeries a = random_series(rng, 10);
    const TruncatedSeries b = random_series(rng, 10);
    const TruncatedSeries c = random_series(rng, 10);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("div then mul round-trips (property)") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedSeries a = random_series(rng, 10);
    const TruncatedSeries b = random_series(rng, 10, /*unit_constant=*/true);
    CHECK(div(a, b) * b == a);
  }
}

TEST_CASE("valuation") {
  CHECK(from_ints({0, 0, 3}).valuation() == 2);
  CHECK(TruncatedSeries::zero(4).valuation() == 4);
  CHECK(from_ints({1}).valuation() == 0);
}
