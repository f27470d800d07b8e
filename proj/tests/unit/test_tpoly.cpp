#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qtscreen/tpoly.hpp"

using namespace qtscreen;

namespace {

TPoly P(std::initializer_list<std::pair<int, std::int64_t>> terms) { return TPoly::from_terms(terms); }

TPoly random_poly(std::mt19937_64& rng) {
  std::vector<std::pair<int, std::int64_t>> terms;
  const int n = static_cast<int>(rng() % 4);
  for (int j = 0; j < n; ++j)
    terms.emplace_back(static_cast<int>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 7) - 3);
  return TPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("t-integers") {
  CHECK(t_integer(0).is_zero());
  CHECK(t_integer(2) == P({{0, 1}, {2, 1}}));
  CHECK(t_integer(-1) == P({{-2, -1}}));
  CHECK(t_integer(3) == P({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(t_integer(-2) == P({{-2, -1}, {-4, -1}}));
}

TEST_CASE("gaussian binomials") {
  CHECK(gauss_binom(1, 1) == TPoly(1));
  CHECK(gauss_binom(2, 1) == P({{-1, 1}, {1, 1}}));
  CHECK(gauss_binom(3, 1) == P({{-2, 1}, {0, 1}, {2, 1}}));
  CHECK(gauss_binom(4, 2) == P({{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
  CHECK(gauss_binom(3, 4).is_zero());
  CHECK(gauss_binom(3, -1).is_zero());
  CHECK(gauss_binom(0, 0) == TPoly(1));
  CHECK_THROWS_AS(gauss_binom(-1, 0), std::invalid_argument);
}

TEST_CASE("bar substitution") {
  CHECK(bar_t(P({{0, 1}, {2, 1}})) == P({{0, 1}, {-2, 1}}));
  CHECK(bar_t(P({{-1, 1}, {1, 1}})) == P({{-1, 1}, {1, 1}}));
  CHECK(bar_t(TPoly()).is_zero());
}

TEST_CASE("division by t - 1") {
  const auto q = divide_by_t_minus_1(P({{2, 1}, {0, -1}}));
  REQUIRE(q.has_value());
  CHECK(*q == P({{1, 1}, {0, 1}}));
  CHECK_FALSE(divide_by_t_minus_1(P({{0, 1}, {2, 1}})).has_value());
  const auto z = divide_by_t_minus_1(TPoly());
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  const auto neg = divide_by_t_minus_1(P({{-3, 1}, {2, -1}}));
  REQUIRE(neg.has_value());
  CHECK(*neg * P({{1, 1}, {0, -1}}) == P({{-3, 1}, {2, -1}}));
}

TEST_CASE("rendering") {
  CHECK(P({{-2, 1}, {0, 1}, {2, 3}}).to_string() == "t^-2 + 1 + 3t^2");
  CHECK(TPoly().to_string() == "0");
  CHECK(P({{1, -1}}).to_string() == "-t");
  CHECK(P({{0, -2}, {3, 1}}).to_string() == "-2 + t^3");
}

TEST_CASE("structure queries") {
  const TPoly p = P({{-1, 2}, {3, -1}});
  CHECK(p.low_degree() == -1);
  CHECK(p.high_degree() == 3);
  CHECK(p.coeff(3) == -1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.eval_at_one() == 1);
  CHECK(TPoly::monomial(5, 2).is_monomial());
  CHECK(p.shifted(2) == P({{1, 2}, {5, -1}}));
  CHECK((p - p).is_zero());
}

TEST_CASE("overflow is reported") {
  const TPoly big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * TPoly(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    const TPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(bar_t(a * b) == bar_t(a) * bar_t(b));
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK(a + (-a) == TPoly());
  }
}

TEST_CASE("binomial recursion for small arguments") {
  for (int p = 1; p <= 12; ++p)
    for (int r = 1; r <= p; ++r) {
      const TPoly rhs = gauss_binom(p, r).shifted(-r) + gauss_binom(p, r - 1).shifted(p + 1 - r);
      CHECK(gauss_binom(p + 1, r) == rhs);
    }
}
