#include <doctest.h>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"

using namespace qtscreen;

TEST_CASE("free operator on generators") {
  const CartanData sl2 = load_cartan("sl2");
  CHECK(render(screen_l(sl2, 1, parse_hat(sl2, "W[1,0]"))) == "W[1,0]·S[1,0]");
  CHECK(render(screen_l(sl2, 1, parse_hat(sl2, "V[1,1]"))) == "-t^-2·V[1,1]·S[1,0] - t^-2·V[1,1]·S[1,2]");
  CHECK(render(screen_l(sl2, 1, parse_y(sl2, "Y[1,0]^-1"))) == "-t^-2·Y[1,0]^-1·S[1,0]");
  CHECK(render(screen_l(sl2, 1, parse_y(sl2, "Y[1,0]"))) == "Y[1,0]·S[1,0]");
  CHECK(render(screen_l(sl2, 1, parse_classical(sl2, "Y[1,0]^-1"))) == "-Y[1,0]^-1·S[1,0]");
  const CartanData a2 = load_cartan("A2");
  CHECK(screen_l(a2, 2, parse_hat(a2, "W[1,0]")).is_zero());
  CHECK(render(screen_l(a2, 2, parse_hat(a2, "V[1,0]"))) == "V[1,0]·S[2,0]");
  CHECK(screen_l(a2, 1, parse_hat(a2, "7")).is_zero());
}

TEST_CASE("right action") {
  const CartanData a2 = load_cartan("A2");
  YScreener s(1);
  s.add_term(YMonomial{}, 0, TPoly(1));
  CHECK(right_action(a2, s, YMonomial::Y(1, 0)) == [&] {
    YScreener r(1);
    r.add_term(YMonomial::Y(1, 0), 0, TPoly::t_power(2));
    return r;
  }());
  CHECK(right_action(a2, s, YMonomial::Y(1, 0, -1)).coeff(YMonomial::Y(1, 0, -1), 0) == TPoly::t_power(-2));
  HatScreener h(1);
  h.add_term(HatMonomial{}, 0, TPoly(1));
  CHECK(right_action(a2, h, HatMonomial::W(2, 5)).coeff(HatMonomial::W(2, 5), 0) == TPoly(1));
}

TEST_CASE("hatF normal form") {
  const CartanData sl2 = load_cartan("sl2");
  HatScreener s(1);
  s.add_term(HatMonomial::W(1, 0) * HatMonomial::V(1, 1), 2, TPoly(1));
  CHECK(render(nf(sl2, QuotientKind::hatF, s)) == "t^2·W[1,0]·S[1,0]");
  CHECK(nf(sl2, QuotientKind::hatF, hatF_generator(sl2, 1, HatMonomial::W(1, 0), 0)).is_zero());
}

TEST_CASE("anchored normal forms") {
  const CartanData sl2 = load_cartan("sl2");
  YScreener s(1);
  s.add_term(YMonomial::Y(1, 0), 0, TPoly(1));
  CHECK(nf(sl2, QuotientKind::yF, s) == s);
  YScreener shifted(1);
  shifted.add_term(YMonomial::Y(1, 0), 2, TPoly(1));
  CHECK(nf(sl2, QuotientKind::yF, shifted).is_zero() == false);
  CHECK(nf(sl2, QuotientKind::yF, yF_generator(sl2, 1, YMonomial::Y(1, 0), 4)).is_zero());
  CHECK(nf(sl2, QuotientKind::yFprime, yFprime_generator(sl2, 1, YMonomial::Y(1, 3, -2), -5)).is_zero());
  CHECK(nf(sl2, QuotientKind::classicalF, classicalF_generator(sl2, 1, YMonomial::Y(1, 1), 1)).is_zero());
  const CartanData g2 = load_cartan("G2");
  CHECK(nf(g2, QuotientKind::yF, yF_generator(g2, 2, YMonomial::Y(1, 0), 1)).is_zero());
  CHECK(nf(g2, QuotientKind::yFprime, yFprime_generator(g2, 2, YMonomial::Y(2, 2), -4)).is_zero());
}

TEST_CASE("kind must match the ring") {
  const CartanData sl2 = load_cartan("sl2");
  HatScreener h(1);
  h.add_term(HatMonomial::W(1, 0), 0, TPoly(1));
  CHECK_THROWS_AS(nf(sl2, QuotientKind::yF, h), InputError);
  YScreener y(1);
  y.add_term(YMonomial::Y(1, 0), 0, TPoly(1));
  CHECK_THROWS_AS(nf(sl2, QuotientKind::hatF, y), InputError);
  CHECK_THROWS_AS(parse_quotient_kind("zF"), InputError);
  CHECK(parse_quotient_kind("yF'") == QuotientKind::yFprime);
}

TEST_CASE("screening operators") {
  const CartanData sl2 = load_cartan("sl2");
  CHECK(screen(sl2, QuotientKind::hatF, 1, parse_hat(sl2, "W[1,0]*(1+V[1,1])")).is_zero());
  CHECK(render(screen(sl2, QuotientKind::hatF, 1, parse_hat(sl2, "V[1,1]"))) == "-S[1,0] - t^-2·V[1,1]·S[1,0]");
  CHECK(render(screen(sl2, QuotientKind::classicalF, 1, parse_classical(sl2, "Y[1,0]"))) == "Y[1,0]·S[1,0]");
  const CartanData a2 = load_cartan("A2");
  CHECK(screen(a2, QuotientKind::yF, 2, parse_y(a2, "Y[1,0]")).is_zero());
  CHECK(screen(sl2, QuotientKind::yF, 1, parse_y(sl2, "Y[1,0] + Y[1,2]^-1")).is_zero());
  CHECK(screen(sl2, QuotientKind::classicalF, 1, parse_classical(sl2, "Y[1,0] + Y[1,2]^-1")).is_zero());
  CHECK_FALSE(screen(sl2, QuotientKind::yF, 1, parse_y(sl2, "Y[1,0]")).is_zero());
}

TEST_CASE("screener bar") {
  const CartanData sl2 = load_cartan("sl2");
  YScreener s(1);
  s.add_term(YMonomial::Y(1, 0), 0, TPoly(1));
  CHECK(bar_screener(sl2, s) == s);
  YScreener t(1);
  t.add_term(YMonomial{}, 0, TPoly::t_power(1));
  CHECK(render(bar_screener(sl2, t)) == "t^-3·S[1,0]");
  CHECK(bar_screener(sl2, bar_screener(sl2, t)) == t);
}

TEST_CASE("screener projections") {
  const CartanData a2 = load_cartan("A2");
  HatScreener h(1);
  h.add_term(HatMonomial::W(1, 0), 0, TPoly::from_terms({{0, 1}, {2, 1}}));
  CHECK(render(pi_tilde_screener(a2, h)) == "2·Y[1,0]·S[1,0]");
  CHECK(render(hat_pi_d_screener(a2, Bicharacter::zero(), h)) == "(1 + t^2)·Y[1,0]·S[1,0]");
  CHECK(render(pi_t_screener(hat_pi_d_screener(a2, Bicharacter::zero(), h))) == "2·Y[1,0]·S[1,0]");
}
