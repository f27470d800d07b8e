#include "qtscreen/screening.hpp"

#include <tuple>
#include <vector>

#include "qtscreen/errors.hpp"

namespace qtscreen {

namespace {

int floor_mod(int k, int m) { return ((k % m) + m) % m; }

template <class Screener, class Element, class CoeffOf, class Weights>
Screener screen_l_impl(int i, const Element& x, const CoeffOf& coeff_of, const Weights& weights) {
  Screener out(i);
  for (const auto& [m, c] : x) {
    const YMonomial u = weights(m);
    for (const auto& [p, e] : u.u)
      if (p.node == i) out.add_term(m, p.k, coeff_mul(c, coeff_of(e)));
  }
  return out;
}

}  // namespace

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::hatF:
      return "hatF";
    case QuotientKind::yF:
      return "yF";
    case QuotientKind::yFprime:
      return "yFprime";
    case QuotientKind::classicalF:
      return "classicalF";
  }
  return "hatF";
}

QuotientKind parse_quotient_kind(const std::string& s) {
  if (s == "hatF") return QuotientKind::hatF;
  if (s == "yF") return QuotientKind::yF;
  if (s == "yFprime" || s == "yF'") return QuotientKind::yFprime;
  if (s == "classicalF") return QuotientKind::classicalF;
  throw InputError("unknown quotient kind '" + s + "' (expected hatF, yF, yFprime, classicalF)");
}

HatScreener screen_l(const CartanData& cd, int i, const HatElement& x) {
  cd.check_node(i);
  return screen_l_impl<HatScreener>(
      i, x, [](int u) { return t_integer(u); }, [&cd](const HatMonomial& m) { return hat_to_y(cd, m); });
}

YScreener screen_l(const CartanData& cd, int i, const YElement& x) {
  cd.check_node(i);
  return screen_l_impl<YScreener>(
      i, x, [](int u) { return t_integer(u); }, [](const YMonomial& m) { return m; });
}

ClassicalScreener screen_l(const CartanData& cd, int i, const ClassicalElement& x) {
  cd.check_node(i);
  return screen_l_impl<ClassicalScreener>(
      i, x, [](int u) { return static_cast<std::int64_t>(u); }, [](const YMonomial& m) { return m; });
}

HatScreener right_action(const CartanData& cd, const HatScreener& s, const HatMonomial& m) {
  HatScreener out(s.node());
  for (const auto& [key, c] : s) out.add_term(key.first * m, key.second, c.shifted(2 * u_of_hat(cd, m, s.node(), key.second)));
  return out;
}

YScreener right_action(const CartanData&, const YScreener& s, const YMonomial& m) {
  YScreener out(s.node());
  for (const auto& [key, c] : s) out.add_term(key.first * m, key.second, c.shifted(2 * u_of_y(m, s.node(), key.second)));
  return out;
}

ClassicalScreener right_action(const CartanData&, const ClassicalScreener& s, const YMonomial& m) {
  ClassicalScreener out(s.node());
  for (const auto& [key, c] : s) out.add_term(key.first * m, key.second, c);
  return out;
}

HatScreener right_action(const CartanData& cd, const HatScreener& s, const HatElement& x) {
  HatScreener out(s.node());
  for (const auto& [m, c] : x) out += right_action(cd, s, m).scaled(c);
  return out;
}

YScreener right_action(const CartanData& cd, const YScreener& s, const YElement& x) {
  YScreener out(s.node());
  for (const auto& [m, c] : x) out += right_action(cd, s, m).scaled(c);
  return out;
}

HatScreener left_mul(const HatElement& u, const HatScreener& s) {
  HatScreener out(s.node());
  for (const auto& [m1, c1] : u)
    for (const auto& [key, c2] : s) out.add_term(m1 * key.first, key.second, c1 * c2);
  return out;
}

YScreener left_mul(const YElement& u, const YScreener& s) {
  YScreener out(s.node());
  for (const auto& [m1, c1] : u)
    for (const auto& [key, c2] : s) out.add_term(m1 * key.first, key.second, c1 * c2);
  return out;
}

HatScreener left_star(const CartanData& cd, const Bicharacter& b, const HatElement& u, const HatScreener& s) {
  check_bicharacter(cd, b);
  HatScreener out(s.node());
  for (const auto& [m1, c1] : u)
    for (const auto& [key, c2] : s)
      out.add_term(m1 * key.first, key.second, (c1 * c2).shifted(2 * d_eval(cd, b, m1, key.first)));
  return out;
}

HatScreener right_star(const CartanData& cd, const Bicharacter& b, const HatScreener& s, const HatElement& x) {
  check_bicharacter(cd, b);
  HatScreener out(s.node());
  for (const auto& [key, c1] : s)
    for (const auto& [m2, c2] : x) {
      const int shift = 2 * u_of_hat(cd, m2, s.node(), key.second) + 2 * d_eval(cd, b, key.first, m2);
      out.add_term(key.first * m2, key.second, (c1 * c2).shifted(shift));
    }
  return out;
}

HatScreener nf(const CartanData& cd, QuotientKind kind, const HatScreener& s) {
  if (kind != QuotientKind::hatF) throw InputError("hat screeners reduce only modulo hatF");
  const int i = s.node();
  cd.check_node(i);
  const int r = cd.r(i);
  HatScreener out(i);
  std::vector<std::tuple<HatMonomial, int, TPoly>> todo;
  for (const auto& [key, c] : s) todo.emplace_back(key.first, key.second, c);
  while (!todo.empty()) {
    auto [m, k, c] = std::move(todo.back());
    todo.pop_back();
    // Strip one V_{i,k-r}: M S_k -> t^{2 - 2u_{i,k}(M / V)} (M / V) S_{k-2r}.
    while (m.v.get(i, k - r) > 0) {
      m.v.add(i, k - r, -1);
      c.shift(2 - 2 * u_of_hat(cd, m, i, k));
      k -= 2 * r;
    }
    out.add_term(m, k, c);
  }
  return out;
}

namespace {

// Moves every S_k to the anchor of its class k mod 2r using the relation of the kind.
template <class Screener, class Factor>
Screener anchor_reduce(const CartanData& cd, const Screener& s, const Factor& factor) {
  const int i = s.node();
  cd.check_node(i);
  const int r = cd.r(i);
  Screener out(i);
  for (const auto& [key, c0] : s) {
    YMonomial m = key.first;
    int k = key.second;
    auto c = c0;
    const int anchor = floor_mod(k, 2 * r);
    while (k > anchor) {
      YMonomial lower = m * a_power(cd, i, k - r, 1);
      c = coeff_mul(c, factor(lower, k, /*down=*/true));
      m = std::move(lower);
      k -= 2 * r;
    }
    while (k < anchor) {
      c = coeff_mul(c, factor(m, k, /*down=*/false));
      m *= a_power(cd, i, k + r, -1);
      k += 2 * r;
    }
    out.add_term(m, k, c);
  }
  return out;
}

}  // namespace

YScreener nf(const CartanData& cd, QuotientKind kind, const YScreener& s) {
  const int i = s.node();
  cd.check_node(i);
  const int r = cd.r(i);
  if (kind == QuotientKind::yF) {
    // m A^{-1}_{k+r} S_{k+2r} = t^{2 - 2u_{k+2r}(m)} m S_k
    return anchor_reduce(cd, s, [i, r](const YMonomial& m, int k, bool down) {
      return down ? TPoly::t_power(2 - 2 * u_of_y(m, i, k)) : TPoly::t_power(-2 + 2 * u_of_y(m, i, k + 2 * r));
    });
  }
  if (kind == QuotientKind::yFprime) {
    // m A^{-1}_{k+r} S_{k+2r} = t^{1 - u_{k+2r}(m) + u_k(m)} m S_k
    return anchor_reduce(cd, s, [i, r](const YMonomial& m, int k, bool down) {
      return down ? TPoly::t_power(1 - u_of_y(m, i, k) + u_of_y(m, i, k - 2 * r))
                  : TPoly::t_power(-1 + u_of_y(m, i, k + 2 * r) - u_of_y(m, i, k));
    });
  }
  throw InputError("y screeners reduce only modulo yF or yFprime");
}

ClassicalScreener nf(const CartanData& cd, QuotientKind kind, const ClassicalScreener& s) {
  if (kind != QuotientKind::classicalF) throw InputError("classical screeners reduce only modulo classicalF");
  return anchor_reduce(cd, s, [](const YMonomial&, int, bool) { return std::int64_t{1}; });
}

HatScreener screen(const CartanData& cd, QuotientKind kind, int i, const HatElement& x) {
  return nf(cd, kind, screen_l(cd, i, x));
}

YScreener screen(const CartanData& cd, QuotientKind kind, int i, const YElement& x) {
  return nf(cd, kind, screen_l(cd, i, x));
}

ClassicalScreener screen(const CartanData& cd, QuotientKind kind, int i, const ClassicalElement& x) {
  return nf(cd, kind, screen_l(cd, i, x));
}

HatScreener bar_screener(const CartanData& cd, const Bicharacter& b, const HatScreener& s) {
  check_bicharacter(cd, b);
  HatScreener out(s.node());
  for (const auto& [key, c] : s) {
    const HatMonomial& m = key.first;
    const int shift = -2 + 2 * d_eval(cd, b, m, m) + 2 * u_of_hat(cd, m, s.node(), key.second);
    out.add_term(m, key.second, bar_t(c).shifted(shift));
  }
  return out;
}

YScreener bar_screener(const CartanData&, const YScreener& s) {
  YScreener out(s.node());
  for (const auto& [key, c] : s)
    out.add_term(key.first, key.second, bar_t(c).shifted(-2 + 2 * u_of_y(key.first, s.node(), key.second)));
  return out;
}

HatScreener hatF_generator(const CartanData& cd, int i, const HatMonomial& m, int k) {
  cd.check_node(i);
  const int r = cd.r(i);
  HatScreener g(i);
  g.add_term(m * HatMonomial::V(i, k + r), k + 2 * r, TPoly::t_power(2 * u_of_hat(cd, m, i, k + 2 * r)));
  g.add_term(m, k, TPoly::monomial(-1, 2));
  return g;
}

YScreener yF_generator(const CartanData& cd, int i, const YMonomial& m, int k) {
  cd.check_node(i);
  const int r = cd.r(i);
  YScreener g(i);
  g.add_term(m * a_power(cd, i, k + r, -1), k + 2 * r, TPoly::t_power(2 * u_of_y(m, i, k + 2 * r)));
  g.add_term(m, k, TPoly::monomial(-1, 2));
  return g;
}

YScreener yFprime_generator(const CartanData& cd, int i, const YMonomial& m, int k) {
  cd.check_node(i);
  const int r = cd.r(i);
  YScreener g(i);
  g.add_term(m * a_power(cd, i, k + r, -1), k + 2 * r, TPoly::t_power(u_of_y(m, i, k + 2 * r) - u_of_y(m, i, k)));
  g.add_term(m, k, TPoly::monomial(-1, 1));
  return g;
}

ClassicalScreener classicalF_generator(const CartanData& cd, int i, const YMonomial& m, int k) {
  cd.check_node(i);
  const int r = cd.r(i);
  ClassicalScreener g(i);
  g.add_term(m * a_power(cd, i, k + r, -1), k + 2 * r, 1);
  g.add_term(m, k, -1);
  return g;
}

ClassicalScreener pi_tilde_screener(const CartanData& cd, const HatScreener& s) {
  ClassicalScreener out(s.node());
  for (const auto& [key, c] : s) out.add_term(hat_to_y(cd, key.first), key.second, c.eval_at_one());
  return out;
}

YScreener hat_pi_d_screener(const CartanData& cd, const Bicharacter& b, const HatScreener& s) {
  check_bicharacter(cd, b);
  YScreener out(s.node());
  for (const auto& [key, c] : s)
    out.add_term(hat_to_y(cd, key.first), key.second, c.shifted(-d_eval(cd, b, key.first, key.first)));
  return out;
}

ClassicalScreener pi_t_screener(const YScreener& s) {
  ClassicalScreener out(s.node());
  for (const auto& [key, c] : s) out.add_term(key.first, key.second, c.eval_at_one());
  return out;
}

}  // namespace qtscreen
