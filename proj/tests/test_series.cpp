#include <doctest.h>

#include <random>

#include "hp/catalog.hpp"
#include "hp/series.hpp"

using namespace hp;

namespace {

TruncatedSeries series_of(std::vector<long> ints) {
  std::vector<Rational> c;
  c.reserve(ints.size());
  for (long v : ints) c.emplace_back(v);
  return TruncatedSeries(static_cast<int>(ints.size()) - 1, std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("ring operations on fixtures") {
  const auto h = series_of({0, 1, 2, 6, 22});
  const auto one = TruncatedSeries::monomial(Rational(1), 0, 4);
  const auto one_plus_h = series_add(one, h);
  const auto ratio = series_div(h, one_plus_h);
  CHECK(series_mul(one_plus_h, ratio) == h);

  CHECK(series_arith(SeriesOp::Add, h, TruncatedSeries::zero(4)) == h);

  const auto x = TruncatedSeries::x(2);
  CHECK(series_arith(SeriesOp::Mul, x, x) == TruncatedSeries::monomial(Rational(1), 2, 2));

  CHECK_THROWS_AS(series_add(h, TruncatedSeries::zero(3)), Error);
  CHECK_THROWS_AS(series_div(h, TruncatedSeries::x(4)), Error);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  auto random_series = [&](bool unit_constant) {
    TruncatedSeries s(8);
    for (int k = 0; k <= 8; ++k) s.set_coeff(k, Rational(num(rng), den(rng)));
    if (unit_constant && s.coeff(0) == 0) s.set_coeff(0, Rational(1));
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_series(false);
    const auto b = random_series(false);
    const auto c = random_series(false);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    const auto d = random_series(true);
    CHECK(series_div(series_mul(a, d), d) == a);
  }
}

TEST_CASE("composition") {
  const auto h = series_of({0, 1, 2, 6, 22});
  CHECK(compose(TruncatedSeries::x(4), h) == h);
  const auto k = series_of({3, 1, 0, 5, 7});
  CHECK(compose(k, TruncatedSeries::x(4)) == k);

  // x^3 composed with x + x^2 at order 4 gives x^3 + 3x^4.
  const auto cube = TruncatedSeries::monomial(Rational(1), 3, 4);
  auto inner = TruncatedSeries::x(4);
  inner.set_coeff(2, Rational(1));
  CHECK(compose(cube, inner) == series_of({0, 0, 0, 1, 3}));

  CHECK_THROWS_AS(compose(k, series_of({1, 1, 0, 0, 0})), Error);
}

TEST_CASE("composition valuation is multiplicative on monomials") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const int order = 9;
      const auto k = TruncatedSeries::monomial(Rational(1), a, order);
      const auto h = TruncatedSeries::monomial(Rational(2), b, order);
      const auto kh = compose(k, h);
      if (a * b <= order) CHECK(kh.valuation() == a * b);
      else CHECK(kh.is_zero());
    }
}

TEST_CASE("poly_residual certifies the separable series") {
  // Q = y^2 + (x-1)y + x vanishes on the series 0,1,2,6,22,90.
  const BivariatePolynomial q({{Rational(1), 0, 2},
                               {Rational(1), 1, 1},
                               {Rational(-1), 0, 1},
                               {Rational(1), 1, 0}});
  CHECK(poly_residual(q, series_of({0, 1, 2, 6, 22, 90})).is_zero());
  // ...and its residual picks up a wrong coefficient.
  CHECK_FALSE(poly_residual(q, series_of({0, 1, 2, 6, 22, 91})).is_zero());

  const BivariatePolynomial y_minus_x({{Rational(1), 0, 1}, {Rational(-1), 1, 0}});
  CHECK(poly_residual(y_minus_x, TruncatedSeries::x(5)).is_zero());
}

TEST_CASE("solve_sum_closure fixtures") {
  CHECK(solve_sum_closure(2, 5) == series_of({0, 1, 2, 6, 22, 90}));
  CHECK(solve_sum_closure(0, 5) == TruncatedSeries::x(5));
  CHECK(solve_sum_closure(1, 4) == series_of({0, 1, 1, 1, 1}));

  auto bad_k = TruncatedSeries::monomial(Rational(1), 2, 5);
  CHECK_THROWS_AS(solve_sum_closure(1, bad_k, 5), Error);
}

TEST_CASE("solve_sum_closure satisfies the quadratic normal form") {
  // (p-1)H^2 + (x-1+K(H))H + x + K(H) = 0.
  const int order = 8;
  std::vector<TruncatedSeries> ks;
  ks.push_back(TruncatedSeries::zero(order));
  ks.push_back(TruncatedSeries::monomial(Rational(1), 3, order));
  auto k2 = TruncatedSeries::monomial(Rational(1), 3, order);
  k2.set_coeff(4, Rational(1));
  ks.push_back(k2);
  for (int p = 0; p <= 3; ++p)
    for (const auto& k : ks) {
      const auto h = solve_sum_closure(p, k, order);
      CHECK(h.coeff(0) == 0);
      CHECK(h.coeff(1) == 1);
      const auto kh = compose(k, h);
      const auto x = TruncatedSeries::x(order);
      const auto one = TruncatedSeries::monomial(Rational(1), 0, order);
      auto residual = series_mul(series_mul(h, h),
                                 TruncatedSeries::monomial(Rational(p - 1), 0, order));
      residual = series_add(residual,
                            series_mul(series_add(series_sub(x, one), kh), h));
      residual = series_add(residual, series_add(x, kh));
      CHECK(residual.is_zero());
    }
}

TEST_CASE("rational_expand fixtures") {
  const auto numer = BivariatePolynomial::in_x({Rational(1), Rational(-1)});
  const auto denom = BivariatePolynomial::in_x({Rational(1), Rational(-2), Rational(0), Rational(-1)});
  CHECK(rational_expand(numer, denom, 5) == series_of({1, 1, 2, 5, 11, 24}));

  const auto one = BivariatePolynomial::in_x({Rational(1)});
  const auto geo = BivariatePolynomial::in_x({Rational(1), Rational(-1)});
  CHECK(rational_expand(one, geo, 3) == series_of({1, 1, 1, 1}));

  CHECK_THROWS_AS(rational_expand(one, BivariatePolynomial::in_x({Rational(0), Rational(1)}), 3),
                  Error);
}

TEST_CASE("generalized Fibonacci matches its rational generating function") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<Rational> den{Rational(1)};
    for (int i = 0; i < k; ++i) den.emplace_back(-1);
    const auto s = rational_expand(BivariatePolynomial::in_x({Rational(1)}),
                                   BivariatePolynomial::in_x(den), 12);
    for (int n = 0; n <= 12; ++n)
      CHECK(s.coeff(n) == Rational(generalized_fibonacci(n, k)));
  }
}

TEST_CASE("polynomial normalization") {
  const BivariatePolynomial q({{Rational(1), 1, 0}, {Rational(2), 1, 0}, {Rational(-3), 1, 0}});
  CHECK(q.is_zero());
  const BivariatePolynomial r({{Rational(1), 2, 1}, {Rational(1), 0, 0}});
  CHECK(r.terms().size() == 2);
  CHECK_FALSE(r.x_only());
  CHECK(r.max_yexp() == 1);
}

TEST_SUITE_END();
