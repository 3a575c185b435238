#include "airyherm/lacunary.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace airyherm;

namespace {

LacunaryCase at(std::int64_t num, std::int64_t den, std::size_t order) {
  LacunaryCase c;
  c.u = make_rational(num, den);
  c.order = order;
  return c;
}

}  // namespace

TEST_CASE("w series examples") {
  // u = 0: the square root collapses to 1 and w vanishes
  CHECK(w_series(at(0, 1, 5)) == TruncatedSeries::zero(5));

  // u = 1: w = C(3z), coefficients 1, 3, 18, 135
  const TruncatedSeries w1 = w_series(at(1, 1, 4));
  REQUIRE(w1.order() == 4);
  CHECK(w1[0] == 1);
  CHECK(w1[1] == 3);
  CHECK(w1[2] == 18);
  CHECK(w1[3] == 135);

  // constant term is u for any u
  for (std::int64_t k : {-5, -1, 2, 9})
    CHECK(w_series(at(k, 7, 3))[0] == make_rational(k, 7));
}

TEST_CASE("w equals u*C(3uz): two independent constructions") {
  for (auto [num, den] : {std::pair<std::int64_t, std::int64_t>{1, 1},
                          {-2, 1},
                          {2, 3},
                          {5, 7}}) {
    const LacunaryCase c = at(num, den, 10);
    const TruncatedSeries w = w_series(c);
    const TruncatedSeries cat = catalan_series(10);
    const TruncatedSeries arg = TruncatedSeries::variable(10) * (3 * c.u);
    CHECK(w == compose(cat, arg) * c.u);
  }
}

TEST_CASE("formal 2F0") {
  // zero argument gives the empty product 1
  CHECK(hyp2f0_formal(make_rational(1, 6), make_rational(5, 6),
                      TruncatedSeries::zero(4)) == TruncatedSeries::one(4));

  // single surviving term: 1 + (1/6)(5/6) * 54 z^2 = 1 + (15/2) z^2
  const TruncatedSeries z = TruncatedSeries::variable(3);
  const TruncatedSeries arg = z * z * BigRational(54);
  const TruncatedSeries h =
      hyp2f0_formal(make_rational(1, 6), make_rational(5, 6), arg);
  CHECK(h[0] == 1);
  CHECK(h[1] == 0);
  CHECK(h[2] == make_rational(15, 2));

  // valuation below 2 is rejected
  CHECK_THROWS_AS(hyp2f0_formal(make_rational(1, 6), make_rational(5, 6),
                                TruncatedSeries::variable(4)),
                  std::domain_error);
}

TEST_CASE("lhs series examples") {
  // N=1: only H_0 = 1
  CHECK(lhs_series(at(17, 3, 1)) == TruncatedSeries::one(1));

  // u=1, N=2: H_3(1) = 4
  const TruncatedSeries l1 = lhs_series(at(1, 1, 2));
  CHECK(l1[0] == 1);
  CHECK(l1[1] == 4);

  // u=0, N=3: H_6(0) = 15 (5!!), coefficient 15/2!
  const TruncatedSeries l0 = lhs_series(at(0, 1, 3));
  CHECK(l0[0] == 1);
  CHECK(l0[1] == 0);
  CHECK(l0[2] == make_rational(15, 2));
}

TEST_CASE("rhs series low-order examples") {
  // N=1: w(0) = u collapses every factor to 1
  for (std::int64_t k : {-3, 0, 1, 4})
    CHECK(rhs_series(at(k, 1, 1)) == TruncatedSeries::one(1));

  // u=1, N=2: hand expansion yields coefficient u^3 + 3u = 4
  const TruncatedSeries r = rhs_series(at(1, 1, 2));
  CHECK(r[0] == 1);
  CHECK(r[1] == 4);
}

TEST_CASE("the z coefficient of the right side picks out the combinatorial convention") {
  for (std::int64_t k : {1, 2, -3}) {
    const BigRational u = make_rational(k, 2);
    const TruncatedSeries r = rhs_series({u, 2});
    const BigRational comb = u * u * u + 3 * u;  // combinatorial H_3(u)
    const BigRational prob = u * u * u - 3 * u;  // probabilists'
    const BigRational phys = 8 * u * u * u - 12 * u;  // physicists'
    CHECK(r[1] == comb);
    CHECK(r[1] != prob);
    CHECK(r[1] != phys);
  }
}

TEST_CASE("lacunary identity verdicts") {
  CHECK(verify_lacunary(at(0, 1, 8)).pass);
  CHECK(verify_lacunary(at(1, 1, 1)).pass);

  const LacunaryVerdict v = verify_lacunary(at(2, 3, 12));
  CHECK(v.pass);
  CHECK(!v.first_mismatch.has_value());
  CHECK(v.lhs == v.rhs);
  for (std::size_t k = 0; k < v.lhs.order(); ++k) {
    CHECK(is_canonical(v.lhs[k]));
    CHECK(is_canonical(v.rhs[k]));
  }
}

TEST_CASE("mismatch reporting") {
  const TruncatedSeries a = lhs_series(at(1, 1, 5));
  std::vector<BigRational> tampered = a.coeffs();
  tampered[3] += 1;
  const auto mm = first_coeff_mismatch(a, TruncatedSeries(tampered));
  REQUIRE(mm.has_value());
  CHECK(*mm == 3);
  CHECK(!first_coeff_mismatch(a, a).has_value());
}

TEST_CASE("order preconditions") {
  CHECK_THROWS_AS(lhs_series(at(1, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(w_series(at(1, 1, 0)), std::domain_error);
}
