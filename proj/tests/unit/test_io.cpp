#include <doctest.h>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"
#include "qtscreen/verify.hpp"

using namespace qtscreen;

TEST_CASE("parsing and canonical form") {
  const CartanData sl2 = load_cartan("sl2");
  CHECK(render(parse_hat(sl2, "W[1,0]*(1+V[1,1])")) == "W[1,0] + W[1,0]·V[1,1]");
  CHECK(render(parse_y(sl2, "(t^2+1) Y[1,0]^-1")) == "(1 + t^2)·Y[1,0]^-1");
  CHECK(render(parse_y(sl2, "A[1,1]^-1")) == "Y[1,0]^-1·Y[1,2]^-1");
  CHECK(render(parse_hat(sl2, "V[1,1]·W[1,0]")) == "W[1,0]·V[1,1]");
  CHECK(render(parse_hat(sl2, "2 - 2")) == "0");
  CHECK(render(parse_hat(sl2, "-t^-1 W[1,2]^(2)")) == "-t^-1·W[1,2]^2");
  CHECK(render(parse_classical(sl2, "(1+t^2) Y[1,0]")) == "2·Y[1,0]");
  CHECK(parse_y(sl2, "(t Y[1,0])^-1") == YElement(YMonomial::Y(1, 0, -1), TPoly::t_power(-1)));
  CHECK(parse_hat_monomial(sl2, "W[1,0]^2 V[1,1]") == HatMonomial::W(1, 0, 2) * HatMonomial::V(1, 1));
}

TEST_CASE("parse errors") {
  const CartanData a2 = load_cartan("A2");
  for (const char* bad : {"W[1,", "W[3,0]", "Y[1,0]", "W[1,0]^-1", "(1+t)^-1", "W[1,0] +", "V[1,0.5]", "(W[1,0]", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_hat(a2, bad), InputError);
  }
  for (const char* bad : {"W[1,0]", "(2 Y[1,0])^-1", "Y[1,0]^"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_y(a2, bad), InputError);
  }
  CHECK_THROWS_AS(parse_hat_monomial(a2, "W[1,0] + V[1,1]"), InputError);
  CHECK_THROWS_AS(parse_y_monomial(a2, "2 Y[1,0]"), InputError);
}

TEST_CASE("windows and rings") {
  CHECK(parse_window("-6:6") == Window{-6, 6});
  CHECK(parse_window("0:0") == Window{0, 0});
  CHECK_THROWS_AS(parse_window("3:1"), InputError);
  CHECK_THROWS_AS(parse_window("3"), InputError);
  CHECK(parse_ring("classical") == Ring::classical);
  CHECK_THROWS_AS(parse_ring("z"), InputError);
}

TEST_CASE("text and JSON round trips") {
  const CartanData b2 = load_cartan("B2");
  Sampler rng(b2, Window{-6, 6}, 3);
  for (int n = 0; n < 100; ++n) {
    const HatElement x = rng.hat_element();
    const YElement y = rng.y_element();
    const ClassicalElement c = rng.classical_element();
    CHECK(parse_hat(b2, render(x)) == x);
    CHECK(parse_y(b2, render(y)) == y);
    CHECK(parse_classical(b2, render(c)) == c);
    CHECK(hat_from_json(to_json(x)) == x);
    CHECK(y_from_json(to_json(y)) == y);
    CHECK(classical_from_json(to_json(c)) == c);
  }
}

TEST_CASE("JSON shapes") {
  const CartanData sl2 = load_cartan("sl2");
  const Json p = to_json(TPoly::from_terms({{-2, 1}, {0, 3}}));
  CHECK(p == Json{{"-2", 1}, {"0", 3}});
  CHECK(tpoly_from_json(p) == TPoly::from_terms({{-2, 1}, {0, 3}}));
  const Json s = to_json(screen_l(sl2, 1, parse_hat(sl2, "W[1,0]")));
  CHECK(s["node"] == 1);
  CHECK(s["ring"] == "hat");
  CHECK(s["terms"].size() == 1);
  const Json d = decomposition_to_json(decompose(sl2, 1, parse_hat(sl2, "W[1,0] + W[1,0] V[1,1] + V[1,1]")));
  CHECK(d["dominant"].size() == 1);
  CHECK(d["remainder"].size() == 1);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.samples = 20;
  const std::string a = run_suite("leibniz", cfg).to_json().dump();
  const std::string b = run_suite("leibniz", cfg).to_json().dump();
  CHECK(a == b);
  CHECK_THROWS_AS(run_suite("nope", cfg), InputError);
  cfg.cartan = "B2";
  CHECK_THROWS_AS(run_suite("lemma7", cfg), InputError);
}
