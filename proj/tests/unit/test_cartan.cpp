#include <doctest.h>

#include "qtscreen/cartan.hpp"
#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"

using namespace qtscreen;

namespace {

using Matrix = std::vector<std::vector<int>>;

YMonomial mono(std::initializer_list<std::tuple<int, int, int>> factors) {
  YMonomial m;
  for (auto [i, k, e] : factors) m.u.add(i, k, e);
  return m;
}

}  // namespace

TEST_CASE("named types") {
  const CartanData a2 = load_cartan("A2");
  CHECK(a2.matrix() == Matrix{{2, -1}, {-1, 2}});
  CHECK(a2.symmetrizers() == std::vector<int>{1, 1});
  CHECK(a2.is_ade());

  const CartanData b2 = load_cartan("B2");
  CHECK(b2.matrix() == Matrix{{2, -1}, {-2, 2}});
  CHECK(b2.symmetrizers() == std::vector<int>{2, 1});
  CHECK_FALSE(b2.is_ade());

  const CartanData g2 = load_cartan("G2");
  CHECK(g2.matrix() == Matrix{{2, -3}, {-1, 2}});
  CHECK(g2.symmetrizers() == std::vector<int>{1, 3});

  const CartanData c3 = load_cartan("C3");
  CHECK(c3.symmetrizers() == std::vector<int>{1, 1, 2});
  CHECK(c3.c(2, 3) == -2);

  const CartanData b3 = load_cartan("B3");
  CHECK(b3.symmetrizers() == std::vector<int>{2, 2, 1});
  CHECK(b3.c(3, 2) == -2);

  const CartanData f4 = load_cartan("F4");
  CHECK(f4.symmetrizers() == std::vector<int>{2, 2, 1, 1});
  CHECK(f4.c(3, 2) == -2);

  for (const char* name : {"D4", "D5", "E6", "E7", "E8", "A5"}) {
    CAPTURE(name);
    CHECK(load_cartan(name).is_ade());
  }
  CHECK(load_cartan("E6").c(2, 4) == -1);
  CHECK(load_cartan("E6").c(1, 3) == -1);
}

TEST_CASE("aliases and products") {
  CHECK(load_cartan("sl2").matrix() == Matrix{{2}});
  CHECK(load_cartan("sl3").matrix() == load_cartan("A2").matrix());
  CHECK(load_cartan("sl(4)").rank() == 3);
  const CartanData prod = load_cartan("A1xA1");
  CHECK(prod.matrix() == Matrix{{2, 0}, {0, 2}});
  const CartanData mixed = load_cartan("B2xA1");
  CHECK(mixed.rank() == 3);
  CHECK(mixed.symmetrizers() == std::vector<int>{2, 1, 1});
  CHECK_THROWS_AS(load_cartan("Q7"), InputError);
  CHECK_THROWS_AS(load_cartan("D3"), InputError);
  CHECK_THROWS_AS(load_cartan("E9"), InputError);
}

TEST_CASE("explicit matrices") {
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, 1], [1, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[3, -1], [-1, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, -4], [-1, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, -1], [0, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, -2], [-2, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, -1], [-2, 2]], "r": [1, 1]})"), InputError);
  CHECK_THROWS_AS(parse_cartan(R"({"C": [[2, -1, 0], [-1, 2]]})"), InputError);
  const CartanData inferred = parse_cartan(R"({"C": [[2, -1], [-2, 2]]})");
  CHECK(inferred.symmetrizers() == std::vector<int>{2, 1});
  const CartanData given = parse_cartan(R"({"C": [[2, -1], [-1, 2]], "r": [1, 1]})");
  CHECK(given.matrix() == load_cartan("A2").matrix());
}

TEST_CASE("inverse simple monomials") {
  CHECK(a_inverse_monomial(load_cartan("A2"), 1, 0) == mono({{1, -1, -1}, {1, 1, -1}, {2, 0, 1}}));
  CHECK(a_inverse_monomial(load_cartan("B2"), 1, 0) == mono({{1, -2, -1}, {1, 2, -1}, {2, -1, 1}, {2, 1, 1}}));
  CHECK(a_inverse_monomial(load_cartan("sl2"), 1, 3) == mono({{1, 2, -1}, {1, 4, -1}}));
  CHECK(a_inverse_monomial(load_cartan("B2"), 2, 0) == mono({{2, -1, -1}, {2, 1, -1}, {1, 0, 1}}));
  CHECK(a_inverse_monomial(load_cartan("G2"), 2, 0) ==
        mono({{2, -3, -1}, {2, 3, -1}, {1, -2, 1}, {1, 0, 1}, {1, 2, 1}}));
  CHECK(a_inverse_monomial(load_cartan("G2"), 1, 0) == mono({{1, -1, -1}, {1, 1, -1}, {2, 0, 1}}));
  CHECK(a_power(load_cartan("A2"), 1, 0, 2) == a_inverse_monomial(load_cartan("A2"), 1, 0).pow(-2));
}

TEST_CASE("heights are positive on simple monomials") {
  for (const char* name : {"sl2", "A2", "A3", "B2", "C3", "G2", "D4", "F4", "E6", "A1xA1"}) {
    const CartanData cd = load_cartan(name);
    CAPTURE(name);
    for (int i = 1; i <= cd.rank(); ++i) {
      CHECK(cd.height(a_inverse_monomial(cd, i, 0)) < 0);
      CHECK(cd.height_weights()[static_cast<std::size_t>(i - 1)] > 0);
    }
  }
}

TEST_CASE("node range") {
  const CartanData cd = load_cartan("A2");
  CHECK_NOTHROW(cd.check_node(2));
  CHECK_THROWS_AS(cd.check_node(3), InputError);
  CHECK_THROWS_AS(cd.check_node(0), InputError);
}
