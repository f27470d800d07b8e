#include <doctest.h>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"

using namespace qtscreen;

namespace {

TPoly P(std::initializer_list<std::pair<int, std::int64_t>> terms) { return TPoly::from_terms(terms); }

}  // namespace

TEST_CASE("u values") {
  CHECK(u_of_hat(load_cartan("sl2"), HatMonomial::V(1, 1), 1, 0) == -1);
  CHECK(u_of_hat(load_cartan("B2"), HatMonomial::V(2, 0), 1, -2) == 0);
  CHECK(u_of_hat(load_cartan("B2"), HatMonomial::V(1, 0), 2, 1) == 1);
  CHECK(u_of_y(YMonomial::Y(1, 0), 1, 0) == 1);
  CHECK(u_of_y(YMonomial::Y(1, 0, -2), 1, 0) == -2);
  CHECK(u_of_y(YMonomial::Y(1, 0), 2, 0) == 0);
}

TEST_CASE("i-weights") {
  const CartanData sl2 = load_cartan("sl2");
  CHECK(wt_i(sl2, HatMonomial::W(1, 0) * HatMonomial::W(1, 2), 1) == 2);
  CHECK(wt_i(sl2, HatMonomial::V(1, 1), 1) == -2);
  CHECK(wt_i(load_cartan("A1xA1"), HatMonomial::W(2, 0), 1) == 0);
  CHECK(is_dominant(sl2, HatMonomial::W(1, 0), 1));
  CHECK_FALSE(is_dominant(sl2, HatMonomial::V(1, 1), 1));
}

TEST_CASE("bicharacter values") {
  const CartanData sl2 = load_cartan("sl2");
  const CartanData a2 = load_cartan("A2");
  CHECK(d_eval(a2, Bicharacter::zero(), HatMonomial::V(1, 1), HatMonomial::W(1, 0)) == 0);
  CHECK(d_eval(sl2, Bicharacter::at_node(1), HatMonomial::V(1, 1), HatMonomial::W(1, 0)) == 1);
  CHECK(d_eval(a2, Bicharacter::nakajima(), HatMonomial::V(1, 1), HatMonomial::W(1, 0)) == 1);
  CHECK(d_eval(a2, Bicharacter::nakajima(), HatMonomial::V(1, 1), HatMonomial::V(1, 1)) == -1);
  CHECK(d_eval_alt(a2, Bicharacter::nakajima(), HatMonomial::V(1, 1), HatMonomial::W(1, 0)) == 1);
}

TEST_CASE("bicharacter parsing and applicability") {
  CHECK(parse_bicharacter("zero") == Bicharacter::zero());
  CHECK(parse_bicharacter("nakajima") == Bicharacter::nakajima());
  CHECK(parse_bicharacter("node:2") == Bicharacter::at_node(2));
  CHECK(parse_bicharacter("node(1)") == Bicharacter::at_node(1));
  CHECK_THROWS_AS(parse_bicharacter("node:"), InputError);
  CHECK_THROWS_AS(check_bicharacter(load_cartan("B2"), Bicharacter::nakajima()), InputError);
  CHECK_THROWS_AS(check_bicharacter(load_cartan("B2"), Bicharacter::at_node(3)), InputError);
  CHECK_NOTHROW(check_bicharacter(load_cartan("A2"), Bicharacter::nakajima()));
}

TEST_CASE("twisted products") {
  const CartanData a2 = load_cartan("A2");
  const HatElement v(HatMonomial::V(1, 1));
  const HatElement w(HatMonomial::W(1, 0));
  CHECK(star_mul(a2, Bicharacter::zero(), HatElement(HatMonomial::V(1, 0)), HatElement(HatMonomial::W(1, 0))) ==
        HatElement(HatMonomial::V(1, 0) * HatMonomial::W(1, 0)));
  CHECK(star_mul(a2, Bicharacter::nakajima(), v, w) == HatElement(HatMonomial::V(1, 1) * HatMonomial::W(1, 0), TPoly::t_power(2)));
  CHECK(star_mul(a2, Bicharacter::nakajima(), w, v) == HatElement(HatMonomial::V(1, 1) * HatMonomial::W(1, 0)));
}

TEST_CASE("projections") {
  const CartanData a2 = load_cartan("A2");
  CHECK(hat_to_y(a2, HatMonomial::W(1, 0)) == YMonomial::Y(1, 0));
  CHECK(hat_to_y(a2, HatMonomial::V(1, 0)) == YMonomial::Y(1, -1, -1) * YMonomial::Y(1, 1, -1) * YMonomial::Y(2, 0));
  CHECK(pi_tilde_t(a2, HatElement(HatMonomial::W(1, 0), P({{0, 1}, {2, 1}}))) == ClassicalElement(YMonomial::Y(1, 0), 2));
  CHECK(hat_pi_d(a2, Bicharacter::zero(), HatElement(HatMonomial::W(1, 0, 2))) == YElement(YMonomial::Y(1, 0, 2)));
  CHECK(hat_pi_d(a2, Bicharacter::nakajima(), HatElement(HatMonomial::V(1, 1))) ==
        YElement(a_inverse_monomial(a2, 1, 1), TPoly::t_power(1)));
  CHECK(hat_pi_d(a2, Bicharacter::zero(), HatElement(HatMonomial::W(1, 0), TPoly::t_power(1))) ==
        YElement(YMonomial::Y(1, 0), TPoly::t_power(1)));
  CHECK(pi_t(YElement(YMonomial::Y(1, 0), TPoly::t_power(2))) == ClassicalElement(YMonomial::Y(1, 0)));
  CHECK(pi_t(YElement(YMonomial::Y(1, 0), P({{1, 1}, {0, -1}}))).is_zero());
  YElement two = YElement(YMonomial::Y(1, 0)) + YElement(YMonomial::Y(2, 0));
  CHECK(classical_to_y(pi_t(two)) == two);
}

TEST_CASE("node projection") {
  const CartanData a2 = load_cartan("A2");
  CHECK(pi_node(a2, 1, HatMonomial::W(2, 0)).is_one());
  CHECK(pi_node(a2, 1, HatMonomial::V(2, 0)) == HatMonomial::W(1, 0));
  CHECK(pi_node(load_cartan("B2"), 2, HatMonomial::V(1, 0)) == HatMonomial::W(2, 1) * HatMonomial::W(2, -1));
  CHECK(pi_node(a2, 1, HatMonomial::V(1, 3)) == HatMonomial::V(1, 3));
}

TEST_CASE("bar involutions") {
  const CartanData a2 = load_cartan("A2");
  CHECK(bar_hat(a2, Bicharacter::zero(), HatElement(HatMonomial::W(1, 0), TPoly::t_power(1))) ==
        HatElement(HatMonomial::W(1, 0), TPoly::t_power(-1)));
  CHECK(bar_hat(a2, Bicharacter::nakajima(), HatElement(HatMonomial::V(1, 1))) ==
        HatElement(HatMonomial::V(1, 1), TPoly::t_power(-2)));
  CHECK(bar_y(YElement(YMonomial::Y(1, 0), TPoly::t_power(1))) == YElement(YMonomial::Y(1, 0), TPoly::t_power(-1)));
  CHECK(bar_y(YElement(YMonomial::Y(1, 0))) == YElement(YMonomial::Y(1, 0)));
}

TEST_CASE("order on monomials") {
  const CartanData a2 = load_cartan("A2");
  const Window w{-6, 6};
  const auto same = order_le(a2, YMonomial::Y(1, 0), YMonomial::Y(1, 0), w);
  CHECK(same.relation == Relation::equal);
  CHECK(same.certificate.empty());

  const YMonomial lower = YMonomial::Y(1, 0) * a_inverse_monomial(a2, 1, 1);
  const auto le = order_le(a2, lower, YMonomial::Y(1, 0), w);
  CHECK(le.relation == Relation::le);
  CHECK(le.certificate == ExponentMap{{SpectralIndex{1, 1}, 1}});
  CHECK(order_le(a2, YMonomial::Y(1, 0), lower, w).relation == Relation::ge);

  CHECK(order_le(a2, YMonomial::Y(1, 0), YMonomial::Y(2, 0), w).relation == Relation::incomparable);
  const YMonomial mixed = YMonomial::Y(1, 0) * a_inverse_monomial(a2, 1, 1) * a_power(a2, 2, 4, 1);
  CHECK(order_le(a2, mixed, YMonomial::Y(1, 0), w).relation == Relation::incomparable);

  CHECK_THROWS_AS(order_le(a2, YMonomial::Y(1, 9), YMonomial::Y(1, 0), w), WindowError);
  try {
    order_le(a2, YMonomial::Y(1, 9), YMonomial::Y(1, 0), w);
  } catch (const WindowError& e) {
    CHECK(e.required_kmax() >= 9);
  }
}
