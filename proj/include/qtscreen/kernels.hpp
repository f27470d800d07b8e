#pragma once

#include <optional>
#include <string>

#include "qtscreen/rings.hpp"
#include "qtscreen/screening.hpp"

namespace qtscreen {

/// Generator families of the kernel modules.
enum class Flavor { hat, y, yprime, classical };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// m * prod_a sum_{r=0..u_{i,a}} t^{r(u-r)} [u, r]_t V_{i,a q_i}^r. Requires m i-dominant.
HatElement e_hat(const CartanData& cd, int i, const HatMonomial& m);
/// Same expansion with A_{i,a q_i}^{-r} in place of V^r.
YElement e0(const CartanData& cd, int i, const YMonomial& m);
/// e0 with every term M rescaled by t^{-alpha(m, M)}.
YElement e0_prime(const CartanData& cd, int i, const YMonomial& m);
/// e0 at t = 1: m prod_a (1 + A_{i,a q_i}^{-1})^{u_{i,a}}.
ClassicalElement e_classical(const CartanData& cd, int i, const YMonomial& m);

/// sum_a r_a (u_{i,a q_i^{-1}}(m) + u_{i,a q_i}(m) - r_a - r_{a q_i^{-2}}) for
/// M = m prod_a A_{i,a}^{-r_a}, r_a >= 0. Throws InputError if M has another form.
int alpha(const CartanData& cd, int i, const YMonomial& m, const YMonomial& M);

/// x = sum_m dominant[m] E(m) + remainder, remainder free of i-dominant monomials.
template <class Element>
struct Decomposition {
  Element dominant;
  Element remainder;
};

Decomposition<HatElement> decompose(const CartanData& cd, int i, const HatElement& x);
/// flavor y uses e0, yprime uses e0_prime.
Decomposition<YElement> decompose(const CartanData& cd, int i, const YElement& x, Flavor flavor);
Decomposition<ClassicalElement> decompose(const CartanData& cd, int i, const ClassicalElement& x);

/// Recombines a decomposition.
HatElement reconstruct(const CartanData& cd, int i, const Decomposition<HatElement>& d);
YElement reconstruct(const CartanData& cd, int i, const Decomposition<YElement>& d, Flavor flavor);
ClassicalElement reconstruct(const CartanData& cd, int i, const Decomposition<ClassicalElement>& d);

bool in_kernel_module(const CartanData& cd, int i, const HatElement& x);
bool in_kernel_module(const CartanData& cd, int i, const YElement& x, Flavor flavor);
bool in_kernel_module(const CartanData& cd, int i, const ClassicalElement& x);

/// Membership in the intersection over all nodes of the y (or yprime) kernel modules.
bool in_kt(const CartanData& cd, const YElement& x, Flavor flavor);

/// Result of assembling E_i(m) as an ordered twisted product of elementary factors.
struct FactorizationOutcome {
  bool matched = false;
  int beta = 0;
  HatElement product;
  HatElement expected;
  std::string detail;
};

/// Builds the ordered *-product factorization of E_i(m) for the nakajima
/// bicharacter and compares it with t^beta e_hat(m). Requires a simply laced
/// datum and m i-dominant.
FactorizationOutcome verify_prop4(const CartanData& cd, int i, const HatMonomial& m);

}  // namespace qtscreen
