#include "qtscreen/kernels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "qtscreen/errors.hpp"

namespace qtscreen {

namespace {

/// Node-i exponents u_{i,a} of a dominant weight, as (a, u) pairs.
std::vector<std::pair<int, int>> dominant_weights(const YMonomial& weights, int i, const char* what) {
  auto on_i = weights.u.on_node(i);
  for (auto [k, u] : on_i)
    if (u < 0) throw InputError(std::string(what) + ": monomial is not dominant at node " + std::to_string(i));
  return on_i;
}

/// Enumerates every choice 0 <= r_a <= u_a, reporting the chosen exponents at
/// the centers (i, a + r_i) and the coefficient prod t^{r(u-r)} [u, r]_t.
void expand_choices(const std::vector<std::pair<int, int>>& weights, int i, int ri,
                    const std::function<void(const ExponentMap&, const TPoly&)>& emit) {
  ExponentMap chosen;
  std::function<void(std::size_t, const TPoly&)> rec = [&](std::size_t idx, const TPoly& coeff) {
    if (idx == weights.size()) {
      emit(chosen, coeff);
      return;
    }
    const auto [a, u] = weights[idx];
    for (int r = 0; r <= u; ++r) {
      chosen.add(i, a + ri, r);
      rec(idx + 1, coeff * gauss_binom(u, r).shifted(r * (u - r)));
      chosen.add(i, a + ri, -r);
    }
  };
  rec(0, TPoly(1));
}

int alpha_from_centers(const YMonomial& m, int i, int ri, const ExponentMap& centers) {
  int total = 0;
  for (const auto& [p, r] : centers)
    total += r * (u_of_y(m, i, p.k - ri) + u_of_y(m, i, p.k + ri) - r - centers.get(i, p.k - 2 * ri));
  return total;
}

Window window_of(std::initializer_list<const YMonomial*> ms) {
  Window w{0, 0};
  bool first = true;
  for (const YMonomial* m : ms)
    for (const auto& [p, e] : m->u) {
      if (first) {
        w = {p.k, p.k};
        first = false;
      }
      w.kmin = std::min(w.kmin, p.k);
      w.kmax = std::max(w.kmax, p.k);
    }
  return w;
}

// Peels dominant monomials by decreasing weight. With membership_only set it
// stops once a non-dominant term outweighs every dominant one, leaving a
// partial (but nonzero) remainder.
template <class Element, class Weight, class Dominant, class Generator>
Decomposition<Element> peel(const Element& x, const Weight& weight, const Dominant& dominant, const Generator& gen,
                            bool membership_only = false) {
  using Mono = typename Element::Monomial;
  struct Info {
    bool dominant;
    int weight;
  };
  std::map<Mono, Info> seen;
  auto info_of = [&](const Mono& m) -> const Info& {
    auto it = seen.find(m);
    if (it == seen.end()) it = seen.emplace(m, Info{dominant(m), weight(m)}).first;
    return it->second;
  };
  // Present terms keyed by weight, highest last.
  std::set<std::pair<int, Mono>> queue;
  std::set<std::pair<int, Mono>> stuck;
  auto track = [&](const Mono& m, bool present) {
    const Info& inf = info_of(m);
    auto& bucket = inf.dominant ? queue : stuck;
    if (present) {
      bucket.emplace(inf.weight, m);
    } else {
      bucket.erase({inf.weight, m});
    }
  };
  Decomposition<Element> out;
  Element rest = x;
  for (const auto& [m, c] : rest) track(m, true);
  while (!queue.empty()) {
    if (membership_only && !stuck.empty() && std::prev(stuck.end())->first >= std::prev(queue.end())->first) break;
    const Mono m = std::prev(queue.end())->second;
    const auto c = rest.coeff(m);
    out.dominant.add_term(m, c);
    for (const auto& [M, cm] : gen(m)) {
      rest.add_term(M, coeff_mul(coeff_mul(cm, c), decltype(c)(-1)));
      track(M, !coeff_is_zero(rest.coeff(M)));
    }
  }
  out.remainder = std::move(rest);
  return out;
}

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::hat:
      return "hat";
    case Flavor::y:
      return "y";
    case Flavor::yprime:
      return "yprime";
    case Flavor::classical:
      return "classical";
  }
  return "hat";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "hat") return Flavor::hat;
  if (s == "y") return Flavor::y;
  if (s == "yprime" || s == "y'") return Flavor::yprime;
  if (s == "classical") return Flavor::classical;
  throw InputError("unknown flavor '" + s + "' (expected hat, y, yprime, classical)");
}

HatElement e_hat(const CartanData& cd, int i, const HatMonomial& m) {
  cd.check_node(i);
  const auto weights = dominant_weights(hat_to_y(cd, m), i, "e_hat");
  HatElement out;
  expand_choices(weights, i, cd.r(i), [&](const ExponentMap& centers, const TPoly& c) {
    HatMonomial term = m;
    term.v += centers;
    out.add_term(term, c);
  });
  return out;
}

YElement e0(const CartanData& cd, int i, const YMonomial& m) {
  cd.check_node(i);
  const auto weights = dominant_weights(m, i, "e0");
  YElement out;
  expand_choices(weights, i, cd.r(i), [&](const ExponentMap& centers, const TPoly& c) {
    out.add_term(m * a_product(cd, centers.scaled(-1)), c);
  });
  return out;
}

YElement e0_prime(const CartanData& cd, int i, const YMonomial& m) {
  cd.check_node(i);
  const int ri = cd.r(i);
  const auto weights = dominant_weights(m, i, "e0_prime");
  YElement out;
  expand_choices(weights, i, ri, [&](const ExponentMap& centers, const TPoly& c) {
    out.add_term(m * a_product(cd, centers.scaled(-1)), c.shifted(-alpha_from_centers(m, i, ri, centers)));
  });
  return out;
}

ClassicalElement e_classical(const CartanData& cd, int i, const YMonomial& m) { return pi_t(e0(cd, i, m)); }

int alpha(const CartanData& cd, int i, const YMonomial& m, const YMonomial& M) {
  cd.check_node(i);
  const OrderResult res = order_le(cd, M, m, window_of({&m, &M}));
  if (res.relation == Relation::equal) return 0;
  if (res.relation != Relation::le) throw InputError("alpha: M is not m times a product of A^{-1}");
  for (const auto& [p, r] : res.certificate)
    if (p.node != i) throw InputError("alpha: M involves A^{-1} at a node other than " + std::to_string(i));
  return alpha_from_centers(m, i, cd.r(i), res.certificate);
}

namespace {

Decomposition<HatElement> decompose_impl(const CartanData& cd, int i, const HatElement& x, bool membership_only) {
  cd.check_node(i);
  return peel(
      x, [&](const HatMonomial& m) { return wt_i(cd, m, i); },
      [&](const HatMonomial& m) { return is_dominant(cd, m, i); },
      [&](const HatMonomial& m) { return e_hat(cd, i, m); }, membership_only);
}

Decomposition<YElement> decompose_impl(const CartanData& cd, int i, const YElement& x, Flavor flavor, bool membership_only) {
  cd.check_node(i);
  if (flavor != Flavor::y && flavor != Flavor::yprime) throw InputError("y elements decompose with flavor y or yprime");
  return peel(
      x, [&](const YMonomial& m) { return wt_i(m, i); }, [&](const YMonomial& m) { return is_dominant(m, i); },
      [&](const YMonomial& m) { return flavor == Flavor::y ? e0(cd, i, m) : e0_prime(cd, i, m); }, membership_only);
}

Decomposition<ClassicalElement> decompose_impl(const CartanData& cd, int i, const ClassicalElement& x, bool membership_only) {
  cd.check_node(i);
  return peel(
      x, [&](const YMonomial& m) { return wt_i(m, i); }, [&](const YMonomial& m) { return is_dominant(m, i); },
      [&](const YMonomial& m) { return e_classical(cd, i, m); }, membership_only);
}

}  // namespace

Decomposition<HatElement> decompose(const CartanData& cd, int i, const HatElement& x) {
  return decompose_impl(cd, i, x, false);
}

Decomposition<YElement> decompose(const CartanData& cd, int i, const YElement& x, Flavor flavor) {
  return decompose_impl(cd, i, x, flavor, false);
}

Decomposition<ClassicalElement> decompose(const CartanData& cd, int i, const ClassicalElement& x) {
  return decompose_impl(cd, i, x, false);
}

HatElement reconstruct(const CartanData& cd, int i, const Decomposition<HatElement>& d) {
  HatElement out = d.remainder;
  for (const auto& [m, c] : d.dominant) out += e_hat(cd, i, m).scaled(c);
  return out;
}

YElement reconstruct(const CartanData& cd, int i, const Decomposition<YElement>& d, Flavor flavor) {
  YElement out = d.remainder;
  for (const auto& [m, c] : d.dominant) out += (flavor == Flavor::y ? e0(cd, i, m) : e0_prime(cd, i, m)).scaled(c);
  return out;
}

ClassicalElement reconstruct(const CartanData& cd, int i, const Decomposition<ClassicalElement>& d) {
  ClassicalElement out = d.remainder;
  for (const auto& [m, c] : d.dominant) out += e_classical(cd, i, m).scaled(c);
  return out;
}

bool in_kernel_module(const CartanData& cd, int i, const HatElement& x) {
  return decompose_impl(cd, i, x, true).remainder.is_zero();
}

bool in_kernel_module(const CartanData& cd, int i, const YElement& x, Flavor flavor) {
  return decompose_impl(cd, i, x, flavor, true).remainder.is_zero();
}

bool in_kernel_module(const CartanData& cd, int i, const ClassicalElement& x) {
  return decompose_impl(cd, i, x, true).remainder.is_zero();
}

bool in_kt(const CartanData& cd, const YElement& x, Flavor flavor) {
  if (flavor != Flavor::y && flavor != Flavor::yprime) throw InputError("in_kt takes flavor y or yprime");
  if (x.is_scalar()) return true;
  // Fast reject: the top-height monomial must be dominant at every node.
  const YMonomial* top = nullptr;
  std::int64_t top_height = 0;
  for (const auto& [m, c] : x) {
    const std::int64_t h = cd.height(m);
    if (top == nullptr || h > top_height) {
      top = &m;
      top_height = h;
    }
  }
  for (int i = 1; i <= cd.rank(); ++i)
    if (!is_dominant(*top, i)) return false;
  for (int i = 1; i <= cd.rank(); ++i)
    if (!in_kernel_module(cd, i, x, flavor)) return false;
  return true;
}

namespace {

int class_of(int k) { return ((k % 2) + 2) % 2; }

std::string describe_difference(const HatElement& got, const HatElement& want) {
  HatElement diff = got - want;
  if (diff.is_zero()) return "";
  const auto& [m, c] = *diff.begin();
  std::string where;
  for (const auto& [p, e] : m.w) where += "W[" + std::to_string(p.node) + "," + std::to_string(p.k) + "]^" + std::to_string(e) + " ";
  for (const auto& [p, e] : m.v) where += "V[" + std::to_string(p.node) + "," + std::to_string(p.k) + "]^" + std::to_string(e) + " ";
  if (where.empty()) where = "1 ";
  return "first differing monomial " + where + "(product " + got.coeff(m).to_string() + ", expected " +
         want.coeff(m).to_string() + ")";
}

}  // namespace

FactorizationOutcome verify_prop4(const CartanData& cd, int i, const HatMonomial& m) {
  cd.check_node(i);
  if (!cd.is_ade()) throw InputError("verify_prop4 requires a simply laced Cartan datum");
  const Bicharacter nak = Bicharacter::nakajima();
  const YMonomial weights = hat_to_y(cd, m);
  dominant_weights(weights, i, "verify_prop4");
  auto u = [&](int k) { return weights.u.get(i, k); };
  auto v = [&](int k) { return m.v.get(i, k); };

  // Z_{i,a}: W_{i,a} repeated w_{i,a} times, then V_{j,a} repeated v_{j,a} times for C_{j,i} = -1.
  std::map<int, std::vector<HatMonomial>> z;
  for (const auto& [p, e] : m.w)
    if (p.node == i)
      for (int l = 0; l < e; ++l) z[p.k].push_back(HatMonomial::W(i, p.k));
  for (const auto& [p, e] : m.v)
    if (p.node != i && cd.c(p.node, i) == -1)
      for (int l = 0; l < e; ++l) z[p.k].push_back(HatMonomial::V(p.node, p.k));
  auto z_at = [&](int k, int l) -> HatMonomial {
    auto it = z.find(k);
    if (it == z.end() || l < 1 || l > static_cast<int>(it->second.size()))
      throw std::logic_error("factor index out of range");
    return it->second[static_cast<std::size_t>(l - 1)];
  };

  FactorizationOutcome out;
  out.expected = e_hat(cd, i, m);
  for (const auto& [k, seq] : z)
    if (static_cast<int>(seq.size()) != u(k) + v(k + 1) + v(k - 1)) {
      out.detail = "sequence length at k=" + std::to_string(k) + " differs from u + v + v";
      return out;
    }

  HatElement product = HatElement::scalar(1);
  auto times = [&](const HatElement& f) { product = star_mul(cd, nak, product, f); };
  for (const auto& [p, e] : m.w)
    if (p.node != i)
      for (int l = 0; l < e; ++l) times(HatElement(HatMonomial::W(p.node, p.k)));
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> free_vs;  // ((node, class), (k, e))
  for (const auto& [p, e] : m.v)
    if (p.node != i && cd.c(p.node, i) == 0) free_vs.push_back({{p.node, class_of(p.k)}, {p.k, e}});
  std::sort(free_vs.begin(), free_vs.end());
  for (const auto& [key, ke] : free_vs)
    for (int l = 0; l < ke.second; ++l) times(HatElement(HatMonomial::V(key.first, ke.first)));

  std::vector<int> block_points;
  for (const auto& [p, e] : weights.u)
    if (p.node == i && e > 0) block_points.push_back(p.k);
  for (const auto& [p, e] : m.v)
    if (p.node == i) block_points.push_back(p.k - 1);
  std::sort(block_points.begin(), block_points.end(), [](int a, int b) {
    return std::pair{class_of(a), a} < std::pair{class_of(b), b};
  });
  block_points.erase(std::unique(block_points.begin(), block_points.end()), block_points.end());

  try {
    for (int a : block_points) {
      const HatElement vq(HatMonomial::V(i, a + 1));
      const HatElement one_plus_v = HatElement::scalar(1) + vq;
      for (int l = 1; l <= u(a); ++l) times(star_mul(cd, nak, HatElement(z_at(a, l)), one_plus_v));
      for (int l = 1; l <= v(a + 1); ++l) {
        HatElement f = star_mul(cd, nak, HatElement(z_at(a, u(a) + l)), vq);
        f = star_mul(cd, nak, f, HatElement(z_at(a + 2, u(a + 2) + v(a + 3) + l)));
        times(f);
      }
    }
  } catch (const std::logic_error&) {
    out.detail = "factor indices do not fit the sequences";
    return out;
  }
  out.product = product;

  const TPoly lead = product.coeff(m);
  if (!lead.is_monomial() || lead.coeff(lead.low_degree()) != 1) {
    out.detail = "coefficient of m in the product is " + lead.to_string() + ", not a power of t";
    return out;
  }
  out.beta = lead.low_degree();
  const HatElement target = out.expected.scaled(TPoly::t_power(out.beta));
  if (product == target) {
    out.matched = true;
  } else {
    out.detail = describe_difference(product, target);
  }
  return out;
}

}  // namespace qtscreen
