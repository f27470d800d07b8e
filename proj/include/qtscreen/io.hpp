#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qtscreen/kernels.hpp"

namespace qtscreen {

using Json = nlohmann::json;

enum class Ring { hat, y, classical };
std::string to_string(Ring r);
Ring parse_ring(const std::string& s);

/// Named type ("B2", "A1xA1") or JSON {"C": [[...]], "r": [...]} with r optional.
CartanData parse_cartan(std::string_view spec);

/// "kmin:kmax".
Window parse_window(const std::string& s);

// Text grammar: W[i,k], V[i,k] (hat ring), Y[i,k], A[i,k] (y and classical
// rings), integers, t, ^n, products by juxtaposition, '*' or '·', sums with
// '+' and '-', parentheses. Throws InputError on malformed input.
HatElement parse_hat(const CartanData& cd, std::string_view text);
YElement parse_y(const CartanData& cd, std::string_view text);
/// Any t is evaluated at 1.
ClassicalElement parse_classical(const CartanData& cd, std::string_view text);
/// The expression must reduce to a single monomial with coefficient 1.
HatMonomial parse_hat_monomial(const CartanData& cd, std::string_view text);
YMonomial parse_y_monomial(const CartanData& cd, std::string_view text);

std::string render(const HatMonomial& m);
std::string render(const YMonomial& m);
std::string render(const HatElement& x);
std::string render(const YElement& x);
std::string render(const ClassicalElement& x);
std::string render(const HatScreener& s);
std::string render(const YScreener& s);
std::string render(const ClassicalScreener& s);

Json to_json(const TPoly& p);
TPoly tpoly_from_json(const Json& j);
Json to_json(const HatMonomial& m);
Json to_json(const YMonomial& m);
Json to_json(const HatElement& x);
Json to_json(const YElement& x);
Json to_json(const ClassicalElement& x);
Json to_json(const HatScreener& s);
Json to_json(const YScreener& s);
Json to_json(const ClassicalScreener& s);
Json to_json(const ExponentMap& e);

HatElement hat_from_json(const Json& j);
YElement y_from_json(const Json& j);
ClassicalElement classical_from_json(const Json& j);

inline Json to_json_coeff(const TPoly& p) { return to_json(p); }
inline Json to_json_coeff(std::int64_t c) { return c; }

template <class Element>
Json decomposition_to_json(const Decomposition<Element>& d) {
  Json dom = Json::array();
  for (const auto& [m, c] : d.dominant) dom.push_back({{"monomial", to_json(m)}, {"coeff", to_json_coeff(c)}});
  return {{"dominant", dom}, {"remainder", to_json(d.remainder)}};
}


}  // namespace qtscreen
