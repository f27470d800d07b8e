#include "qtscreen/rings.hpp"

#include <algorithm>
#include <cctype>

#include "qtscreen/errors.hpp"

namespace qtscreen {

int u_of_hat(const CartanData& cd, const HatMonomial& m, int i, int k) {
  const int ri = cd.r(i);
  int u = m.w.get(i, k) - m.v.get(i, k - ri) - m.v.get(i, k + ri);
  for (int j = 1; j <= cd.rank(); ++j) {
    if (j == i) continue;
    switch (cd.c(i, j)) {
      case -1:
        u += m.v.get(j, k);
        break;
      case -2:
        u += m.v.get(j, k - 1) + m.v.get(j, k + 1);
        break;
      case -3:
        u += m.v.get(j, k - 2) + m.v.get(j, k) + m.v.get(j, k + 2);
        break;
      default:
        break;
    }
  }
  return u;
}

YMonomial hat_to_y(const CartanData& cd, const HatMonomial& m) {
  YMonomial y{m.w};
  for (const auto& [p, e] : m.v) y *= a_power(cd, p.node, p.k, -e);
  return y;
}

int wt_i(const CartanData& cd, const HatMonomial& m, int i) { return hat_to_y(cd, m).u.node_total(i); }

bool is_dominant(const CartanData& cd, const HatMonomial& m, int i) { return is_dominant(hat_to_y(cd, m), i); }

bool is_dominant(const YMonomial& m, int i) {
  return std::all_of(m.u.begin(), m.u.end(), [i](const auto& en) { return en.first.node != i || en.second >= 0; });
}

std::string Bicharacter::name() const {
  switch (kind) {
    case Kind::zero:
      return "zero";
    case Kind::nakajima:
      return "nakajima";
    case Kind::node:
      return "node:" + std::to_string(node);
  }
  return "zero";
}

Bicharacter parse_bicharacter(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "zero" || s == "0") return Bicharacter::zero();
  if (s == "nakajima") return Bicharacter::nakajima();
  std::string digits;
  if (s.rfind("node:", 0) == 0) {
    digits = s.substr(5);
  } else if (s.rfind("node(", 0) == 0 && s.back() == ')') {
    digits = s.substr(5, s.size() - 6);
  } else {
    throw InputError("unknown bicharacter '" + raw + "' (expected zero, nakajima or node:i)");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw InputError("unknown bicharacter '" + raw + "'");
  return Bicharacter::at_node(std::stoi(digits));
}

void check_bicharacter(const CartanData& cd, const Bicharacter& b) {
  if (b.kind == Bicharacter::Kind::nakajima && !cd.is_ade())
    throw InputError("the nakajima bicharacter requires a simply laced Cartan datum");
  if (b.kind == Bicharacter::Kind::node) cd.check_node(b.node);
}

int d_eval(const CartanData& cd, const Bicharacter& b, const HatMonomial& m1, const HatMonomial& m2) {
  check_bicharacter(cd, b);
  int d = 0;
  switch (b.kind) {
    case Bicharacter::Kind::zero:
      return 0;
    case Bicharacter::Kind::nakajima: {
      const YMonomial u2 = hat_to_y(cd, m2);
      for (const auto& [p, e] : m1.v) d += e * u2.u.get(p.node, p.k - 1);
      for (const auto& [p, e] : m1.w) d += e * m2.v.get(p.node, p.k - 1);
      return d;
    }
    case Bicharacter::Kind::node: {
      const int i = b.node;
      const int r = cd.r(i);
      const YMonomial u1 = hat_to_y(cd, m1);
      const YMonomial u2 = hat_to_y(cd, m2);
      for (const auto& [p, e] : m1.v)
        if (p.node == i) d += e * u2.u.get(i, p.k - r);
      for (const auto& [p, e] : m1.w)
        if (p.node == i) d += e * m2.v.get(i, p.k - r);
      for (const auto& [p, e] : m2.v) {
        if (p.node != i) continue;
        const int k = p.k;
        d += e * (u1.u.get(i, k + r) - m1.w.get(i, k + r) + m1.v.get(i, k) + m1.v.get(i, k + 2 * r));
      }
      return d;
    }
  }
  return d;
}

int d_eval_alt(const CartanData& cd, const Bicharacter& b, const HatMonomial& m1, const HatMonomial& m2) {
  check_bicharacter(cd, b);
  int d = 0;
  switch (b.kind) {
    case Bicharacter::Kind::zero:
      return 0;
    case Bicharacter::Kind::nakajima: {
      const YMonomial u1 = hat_to_y(cd, m1);
      for (const auto& [p, e] : m2.v) d += e * u1.u.get(p.node, p.k + 1);
      for (const auto& [p, e] : m2.w) d += e * m1.v.get(p.node, p.k + 1);
      return d;
    }
    case Bicharacter::Kind::node: {
      const int i = b.node;
      const int r = cd.r(i);
      const YMonomial u1 = hat_to_y(cd, m1);
      const YMonomial u2 = hat_to_y(cd, m2);
      for (const auto& [p, e] : m2.v)
        if (p.node == i) d += e * u1.u.get(i, p.k + r);
      for (const auto& [p, e] : m2.w)
        if (p.node == i) d += e * m1.v.get(i, p.k + r);
      for (const auto& [p, e] : m1.v) {
        if (p.node != i) continue;
        const int a = p.k - r;
        d += e * (u2.u.get(i, a) - m2.w.get(i, a) + m2.v.get(i, a - r) + m2.v.get(i, a + r));
      }
      return d;
    }
  }
  return d;
}

HatElement star_mul(const CartanData& cd, const Bicharacter& b, const HatElement& x, const HatElement& y) {
  check_bicharacter(cd, b);
  HatElement out;
  for (const auto& [m1, c1] : x)
    for (const auto& [m2, c2] : y) out.add_term(m1 * m2, (c1 * c2).shifted(2 * d_eval(cd, b, m1, m2)));
  return out;
}

ClassicalElement pi_tilde_t(const CartanData& cd, const HatElement& x) {
  ClassicalElement out;
  for (const auto& [m, c] : x) out.add_term(hat_to_y(cd, m), c.eval_at_one());
  return out;
}

YElement hat_pi_d(const CartanData& cd, const Bicharacter& b, const HatElement& x) {
  check_bicharacter(cd, b);
  YElement out;
  for (const auto& [m, c] : x) out.add_term(hat_to_y(cd, m), c.shifted(-d_eval(cd, b, m, m)));
  return out;
}

ClassicalElement pi_t(const YElement& x) {
  ClassicalElement out;
  for (const auto& [m, c] : x) out.add_term(m, c.eval_at_one());
  return out;
}

YElement classical_to_y(const ClassicalElement& x) {
  YElement out;
  for (const auto& [m, c] : x) out.add_term(m, TPoly(c));
  return out;
}

HatMonomial pi_node(const CartanData& cd, int i, const HatMonomial& m) {
  cd.check_node(i);
  HatMonomial out;
  for (const auto& [p, e] : m.w)
    if (p.node == i) out.w.add(p, e);
  for (const auto& [p, e] : m.v) {
    if (p.node == i) {
      out.v.add(p, e);
      continue;
    }
    switch (cd.c(i, p.node)) {
      case -1:
        out.w.add(i, p.k, e);
        break;
      case -2:
        out.w.add(i, p.k + 1, e);
        out.w.add(i, p.k - 1, e);
        break;
      case -3:
        out.w.add(i, p.k + 2, e);
        out.w.add(i, p.k, e);
        out.w.add(i, p.k - 2, e);
        break;
      default:
        break;
    }
  }
  return out;
}

HatElement pi_node(const CartanData& cd, int i, const HatElement& x) {
  HatElement out;
  for (const auto& [m, c] : x) out.add_term(pi_node(cd, i, m), c);
  return out;
}

HatElement bar_hat(const CartanData& cd, const Bicharacter& b, const HatElement& x) {
  check_bicharacter(cd, b);
  HatElement out;
  for (const auto& [m, c] : x) out.add_term(m, bar_t(c).shifted(2 * d_eval(cd, b, m, m)));
  return out;
}

YElement bar_y(const YElement& x) {
  YElement out;
  for (const auto& [m, c] : x) out.add_term(m, bar_t(c));
  return out;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal:
      return "equal";
    case Relation::le:
      return "le";
    case Relation::ge:
      return "ge";
    case Relation::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

YMonomial a_product(const CartanData& cd, const ExponentMap& exponents) {
  YMonomial out;
  for (const auto& [p, e] : exponents) out *= a_power(cd, p.node, p.k, e);
  return out;
}

OrderResult order_le(const CartanData& cd, const YMonomial& m1, const YMonomial& m2, const Window& window) {
  int need_lo = window.kmin;
  int need_hi = window.kmax;
  for (const YMonomial* m : {&m1, &m2}) {
    for (const auto& [p, e] : m->u) {
      cd.check_node(p.node);
      need_lo = std::min(need_lo, p.k);
      need_hi = std::max(need_hi, p.k);
    }
  }
  if (need_lo != window.kmin || need_hi != window.kmax)
    throw WindowError("monomials leave the window; need at least " + std::to_string(need_lo) + ":" +
                          std::to_string(need_hi),
                      need_lo, need_hi);

  OrderResult result;
  YMonomial residual = m1 * m2.inverse();
  if (residual.is_one()) {
    result.relation = Relation::equal;
    return result;
  }
  // Exponents are read off from the top: A_{i,k} peaks at (i, k + r_i).
  const int lo = residual.u.k_range().first;
  ExponentMap exps;
  while (!residual.is_one()) {
    const int top = residual.u.k_range().second;
    std::vector<std::pair<int, int>> pivots;
    for (const auto& [p, e] : residual.u)
      if (p.k == top) pivots.emplace_back(p.node, e);
    for (auto [node, e] : pivots) {
      const int center = top - cd.r(node);
      if (center - cd.r(node) < lo) return result;
      exps.add(node, center, e);
      residual *= a_power(cd, node, center, -e);
    }
  }
  // m1 / m2 = prod A^{exps}
  const bool all_neg = std::all_of(exps.begin(), exps.end(), [](const auto& en) { return en.second < 0; });
  const bool all_pos = std::all_of(exps.begin(), exps.end(), [](const auto& en) { return en.second > 0; });
  if (all_neg) {
    result.relation = Relation::le;
    result.certificate = exps.scaled(-1);
  } else if (all_pos) {
    result.relation = Relation::ge;
    result.certificate = exps;
  }
  return result;
}

}  // namespace qtscreen
