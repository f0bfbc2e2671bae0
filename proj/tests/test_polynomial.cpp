#include "cpoly/polynomial.hpp"
#include "cpoly/sr_ideal.hpp"

#include <doctest.h>

#include <random>

using namespace cpoly;

namespace {

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("interpolate examples") {
  const auto one = interpolate({{1, 1}, {2, 1}}, 1);
  CHECK(one.monomial() == q({1}));
  CHECK(one.binomial() == q({1}));
  CHECK(one.degree() == 0);

  const auto chi = interpolate({{1, 0}, {2, 0}, {3, 6}, {4, 24}}, 3);
  CHECK(chi.monomial() == q({0, 2, -3, 1}));
  CHECK(chi.binomial() == q({0, 0, 6, 6}));
  CHECK(evaluate(chi, 4) == 24);
  CHECK(evaluate(chi, 0) == 0);

  CHECK_THROWS_AS(interpolate({{1, 1}, {2, 2}, {3, 4}}, 1), std::domain_error);
  CHECK_THROWS_AS(interpolate({{1, 1}, {1, 2}}, 0), std::domain_error);
  CHECK_THROWS_AS(interpolate({{1, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(interpolate({{0, 1}, {1, 1}}, 1), std::invalid_argument);

  const auto zero = interpolate({{1, 0}, {2, 0}, {3, 0}}, 2);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero == BinomialPolynomial());
}

TEST_CASE("binomial basis examples") {
  CHECK(to_binomial_basis(BinomialPolynomial::from_monomial(q({0, 0, 1}))) == q({1, 3, 2}));
  CHECK(to_binomial_basis(BinomialPolynomial::from_binomial(q({0, 0, 0, 1}))) == q({0, 0, 0, 1}));
  const auto km2 = BinomialPolynomial::from_monomial(q({-2, 1}));
  CHECK(to_binomial_basis(km2) == q({-1, 1}));
  CHECK_FALSE(is_realizable(km2));
  CHECK(is_realizable(BinomialPolynomial::from_binomial(q({0, 0, 6, 6}))));
  CHECK(is_realizable(BinomialPolynomial()));
  CHECK_FALSE(is_realizable(BinomialPolynomial::from_binomial({Rational(1, 2)})));
  CHECK(BinomialPolynomial::from_monomial({Rational(2, 4)}).monomial() == std::vector<Rational>{Rational(1, 2)});
  // C(k-1,3) = (k-1)(k-2)(k-3)/6
  CHECK(BinomialPolynomial::from_binomial(q({0, 0, 0, 1})).monomial() ==
        std::vector<Rational>{Rational(-1), Rational(11, 6), Rational(-1), Rational(1, 6)});
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("round trips between the two bases") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> coeffs(1 + rng() % 5);
    for (auto& c : coeffs) c = Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4));
    for (auto& c : coeffs) c.canonicalize();
    coeffs.back() += coeffs.back() == 0 ? 1 : 0;
    const auto p = BinomialPolynomial::from_monomial(coeffs);
    const std::size_t d = coeffs.size() - 1;
    CHECK(p.degree() == static_cast<int>(d));
    const auto f = to_binomial_basis(p);
    CHECK(f == p.binomial());
    CHECK(BinomialPolynomial::from_binomial(f) == p);
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(d) + 3; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * Rational(binomial(Integer(k - 1), i));
      CHECK(s == p(Rational(k)));
    }
    Rational euler = 0;
    for (std::size_t i = 0; i < f.size(); ++i) euler += (i % 2 ? -1 : 1) * f[i];
    CHECK(p(0) == euler);
  }
}

TEST_CASE("interpolation recovers integer-valued polynomials from samples") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> f(1 + rng() % 5);
    for (auto& x : f) x = static_cast<long>(rng() % 7) - 2;
    const auto p = BinomialPolynomial::from_binomial(f);
    const std::size_t d = f.size() - 1;
    std::vector<Sample> samples;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(d) + 3; ++k) samples.emplace_back(k, p(Rational(k)).get_num());
    const auto back = interpolate(samples, d);
    CHECK(back == p);
    samples.back().second += 1;
    CHECK_THROWS_AS(interpolate(samples, d), std::domain_error);
  }
}
