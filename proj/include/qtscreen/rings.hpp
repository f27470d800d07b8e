#pragma once

#include <string>

#include "qtscreen/cartan.hpp"
#include "qtscreen/element.hpp"

namespace qtscreen {

/// Inclusive range of lattice points k.
struct Window {
  int kmin = -6;
  int kmax = 6;

  bool contains(int k) const { return k >= kmin && k <= kmax; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Effective Y-exponent u_{i,k} of a hat monomial.
int u_of_hat(const CartanData& cd, const HatMonomial& m, int i, int k);
inline int u_of_y(const YMonomial& m, int i, int k) { return m.u.get(i, k); }

/// All u_{i,k}(m) at once: the Y-monomial prod W * prod A^{-1} for the V factors.
YMonomial hat_to_y(const CartanData& cd, const HatMonomial& m);

/// i-weight: the sum of u_{i,k} over k.
int wt_i(const CartanData& cd, const HatMonomial& m, int i);
inline int wt_i(const YMonomial& m, int i) { return m.u.node_total(i); }

/// Every u_{i,k}(m) >= 0.
bool is_dominant(const CartanData& cd, const HatMonomial& m, int i);
bool is_dominant(const YMonomial& m, int i);

/// Biadditive pairing on hat monomials used to twist the product.
struct Bicharacter {
  enum class Kind { zero, nakajima, node };
  Kind kind = Kind::zero;
  int node = 0;

  static Bicharacter zero() { return {Kind::zero, 0}; }
  static Bicharacter nakajima() { return {Kind::nakajima, 0}; }
  static Bicharacter at_node(int i) { return {Kind::node, i}; }

  std::string name() const;
  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;
};

/// Parses "zero", "nakajima", or "node:i" (also "node(i)").
Bicharacter parse_bicharacter(const std::string& s);

/// Throws InputError when b is not usable with cd.
void check_bicharacter(const CartanData& cd, const Bicharacter& b);

int d_eval(const CartanData& cd, const Bicharacter& b, const HatMonomial& m1, const HatMonomial& m2);
/// The second of the two equivalent closed forms; equal to d_eval.
int d_eval_alt(const CartanData& cd, const Bicharacter& b, const HatMonomial& m1, const HatMonomial& m2);

/// m1 *_d m2 = t^{2 d(m1, m2)} m1 m2, extended bilinearly.
HatElement star_mul(const CartanData& cd, const Bicharacter& b, const HatElement& x, const HatElement& y);

/// Ring morphism to the classical ring: W -> Y, V -> A^{-1}, t -> 1.
ClassicalElement pi_tilde_t(const CartanData& cd, const HatElement& x);
/// m -> t^{-d(m,m)} prod Y^{u(m)}, linear over Z[t, t^{-1}].
YElement hat_pi_d(const CartanData& cd, const Bicharacter& b, const HatElement& x);
/// t -> 1.
ClassicalElement pi_t(const YElement& x);
/// Embedding of the classical ring (integer coefficients as constants).
YElement classical_to_y(const ClassicalElement& x);

/// Ring morphism onto the subring generated by the node-i variables.
HatMonomial pi_node(const CartanData& cd, int i, const HatMonomial& m);
HatElement pi_node(const CartanData& cd, int i, const HatElement& x);

/// t -> t^{-1}, m -> t^{2 d(m,m)} m.
HatElement bar_hat(const CartanData& cd, const Bicharacter& b, const HatElement& x);
/// t -> t^{-1}, Y-monomials fixed.
YElement bar_y(const YElement& x);

enum class Relation { equal, le, ge, incomparable };
std::string to_string(Relation r);

/// Outcome of comparing two Y-monomials in the A-monomial partial order.
struct OrderResult {
  Relation relation = Relation::incomparable;
  /// For le: m1 = m2 * prod A_{i,k}^{-v_{i,k}}; for ge: m2 = m1 * prod A_{i,k}^{-v_{i,k}}.
  /// Exponents v are positive; empty for equal and incomparable.
  ExponentMap certificate;
};

/// Decides m1 <= m2, where m * prod A^{-v} <= m for v >= 0. Both monomials
/// must lie in the window; otherwise WindowError reports the bounds needed.
OrderResult order_le(const CartanData& cd, const YMonomial& m1, const YMonomial& m2, const Window& window);

/// prod A_{i,k}^{e_{i,k}}.
YMonomial a_product(const CartanData& cd, const ExponentMap& exponents);

}  // namespace qtscreen
