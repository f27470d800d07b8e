#pragma once

#include <string>

#include "qtscreen/rings.hpp"

namespace qtscreen {

/// Submodule to reduce modulo.
enum class QuotientKind { hatF, yF, yFprime, classicalF };

std::string to_string(QuotientKind k);
/// Accepts hatF, yF, yFprime (or yF'), classicalF.
QuotientKind parse_quotient_kind(const std::string& s);

// Operators into the free screener modules, before any quotient.
HatScreener screen_l(const CartanData& cd, int i, const HatElement& x);
YScreener screen_l(const CartanData& cd, int i, const YElement& x);
ClassicalScreener screen_l(const CartanData& cd, int i, const ClassicalElement& x);

/// s * m with S_{i,k} * m = t^{2 u_{i,k}(m)} m * S_{i,k}.
HatScreener right_action(const CartanData& cd, const HatScreener& s, const HatMonomial& m);
YScreener right_action(const CartanData& cd, const YScreener& s, const YMonomial& m);
ClassicalScreener right_action(const CartanData& cd, const ClassicalScreener& s, const YMonomial& m);
HatScreener right_action(const CartanData& cd, const HatScreener& s, const HatElement& x);
YScreener right_action(const CartanData& cd, const YScreener& s, const YElement& x);

/// Left multiplication U * sum(lambda_k S_k) = sum((U lambda_k) S_k).
HatScreener left_mul(const HatElement& u, const HatScreener& s);
YScreener left_mul(const YElement& u, const YScreener& s);

/// Twisted module structures for *_d.
HatScreener left_star(const CartanData& cd, const Bicharacter& b, const HatElement& u, const HatScreener& s);
HatScreener right_star(const CartanData& cd, const Bicharacter& b, const HatScreener& s, const HatElement& x);

/// Canonical representative modulo the submodule of the given kind; zero iff
/// s lies in the submodule. Throws InputError when kind does not fit the ring.
HatScreener nf(const CartanData& cd, QuotientKind kind, const HatScreener& s);
YScreener nf(const CartanData& cd, QuotientKind kind, const YScreener& s);
ClassicalScreener nf(const CartanData& cd, QuotientKind kind, const ClassicalScreener& s);

/// nf(kind, screen_l(x)).
HatScreener screen(const CartanData& cd, QuotientKind kind, int i, const HatElement& x);
YScreener screen(const CartanData& cd, QuotientKind kind, int i, const YElement& x);
ClassicalScreener screen(const CartanData& cd, QuotientKind kind, int i, const ClassicalElement& x);

/// sum U_k S_k -> sum t^{-2} S_k bar(U_k), renormalized to left form.
HatScreener bar_screener(const CartanData& cd, const Bicharacter& b, const HatScreener& s);
YScreener bar_screener(const CartanData& cd, const YScreener& s);

// Spanning elements of the submodules, for monomial m and lattice point k:
//   hatF:       m (V_{i,k+r} t^{2u_{i,k+2r}(m)} S_{k+2r} - t^2 S_k)
//   yF:         m (A^{-1}_{i,k+r} t^{2u_{i,k+2r}(m)} S_{k+2r} - t^2 S_k)
//   yFprime:    m (A^{-1}_{i,k+r} t^{u_{i,k+2r}(m) - u_{i,k}(m)} S_{k+2r} - t S_k)
//   classicalF: m (A^{-1}_{i,k+r} S_{k+2r} - S_k)
HatScreener hatF_generator(const CartanData& cd, int i, const HatMonomial& m, int k);
YScreener yF_generator(const CartanData& cd, int i, const YMonomial& m, int k);
YScreener yFprime_generator(const CartanData& cd, int i, const YMonomial& m, int k);
ClassicalScreener classicalF_generator(const CartanData& cd, int i, const YMonomial& m, int k);

// Coefficientwise images of the ring projections.
ClassicalScreener pi_tilde_screener(const CartanData& cd, const HatScreener& s);
YScreener hat_pi_d_screener(const CartanData& cd, const Bicharacter& b, const HatScreener& s);
ClassicalScreener pi_t_screener(const YScreener& s);

}  // namespace qtscreen
