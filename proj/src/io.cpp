#include "qtscreen/io.hpp"

#include <cctype>
#include <sstream>

#include "qtscreen/errors.hpp"

namespace qtscreen {

std::string to_string(Ring r) {
  switch (r) {
    case Ring::hat:
      return "hat";
    case Ring::y:
      return "y";
    case Ring::classical:
      return "classical";
  }
  return "hat";
}

Ring parse_ring(const std::string& s) {
  if (s == "hat") return Ring::hat;
  if (s == "y") return Ring::y;
  if (s == "classical") return Ring::classical;
  throw InputError("unknown ring '" + s + "' (expected hat, y, classical)");
}

CartanData parse_cartan(std::string_view spec) {
  std::size_t first = spec.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw InputError("empty Cartan specification");
  if (spec[first] != '{') return load_cartan(spec.substr(first));
  Json j;
  try {
    j = Json::parse(spec);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Cartan JSON: ") + e.what());
  }
  try {
    auto c = j.at("C").get<std::vector<std::vector<int>>>();
    if (j.contains("r")) return CartanData(std::move(c), j.at("r").get<std::vector<int>>());
    return CartanData(std::move(c));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Cartan JSON: ") + e.what());
  }
}

Window parse_window(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("window must be kmin:kmax");
  try {
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string a = s.substr(0, colon);
    const std::string b = s.substr(colon + 1);
    Window w{std::stoi(a, &used1), std::stoi(b, &used2)};
    if (used1 != a.size() || used2 != b.size()) throw InputError("window must be kmin:kmax");
    if (w.kmin > w.kmax) throw InputError("window needs kmin <= kmax");
    return w;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr) throw;
    throw InputError("window must be kmin:kmax");
  }
}

namespace {

// Recursive-descent parser, generic over the target ring.
template <class Element, class Atom, class Invert>
class Parser {
 public:
  Parser(std::string_view text, Atom atom, Invert invert) : text_(text), atom_(atom), invert_(invert) {}

  Element parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Element e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_product_sign() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return true;
    }
    // U+00B7 middle dot in UTF-8.
    if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xC2 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0xB7) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ == text_.size()) return false;
    const char ch = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || ch == 't' || ch == 'W' || ch == 'V' ||
           ch == 'Y' || ch == 'A';
  }

  Element expr() {
    skip_ws();
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Element acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      const bool minus = text_[pos_] == '-';
      ++pos_;
      Element rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (true) {
      if (at_product_sign()) {
        acc = acc * factor();
      } else if (at_atom_start()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  int integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000LL) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Element power(const Element& base, int n) {
    if (n < 0) return power(invert_(base, [this](const std::string& w) { fail(w); }), -n);
    Element result = Element::scalar(1);
    Element b = base;
    while (n > 0) {
      if (n & 1) result = result * b;
      n >>= 1;
      if (n > 0) b = b * b;
    }
    return result;
  }

  Element factor() {
    Element base = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool paren = pos_ < text_.size() && text_[pos_] == '(';
      if (paren) ++pos_;
      const int n = integer(true);
      if (paren) expect(')');
      base = power(base, n);
    }
    return base;
  }

  Element atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Element::scalar(static_cast<std::int64_t>(integer(false)));
    if (ch == 't') {
      ++pos_;
      return Element::scalar(TPoly::t_power(1));
    }
    if (ch == 'W' || ch == 'V' || ch == 'Y' || ch == 'A') {
      ++pos_;
      expect('[');
      const int node = integer(false);
      expect(',');
      const int k = integer(true);
      expect(']');
      return atom_(ch, node, k, [this](const std::string& w) { fail(w); });
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Atom atom_;
  Invert invert_;
};

template <class Element, class Atom, class Invert>
Element run_parser(std::string_view text, Atom atom, Invert invert) {
  return Parser<Element, Atom, Invert>(text, atom, invert).parse();
}

/// Units of Z[t, t^{-1}]: +-t^e.
template <class Fail>
TPoly invert_unit(const TPoly& c, const Fail& fail) {
  if (!c.is_monomial()) fail("negative power of a non-invertible expression");
  const std::int64_t a = c.coeff(c.low_degree());
  if (a != 1 && a != -1) fail("negative power of a non-invertible expression");
  return TPoly::monomial(a, -c.low_degree());
}

}  // namespace

HatElement parse_hat(const CartanData& cd, std::string_view text) {
  auto atom = [&cd](char letter, int node, int k, const auto& fail) -> HatElement {
    if (!cd.valid_node(node)) fail("node " + std::to_string(node) + " out of range");
    if (letter == 'W') return HatElement(HatMonomial::W(node, k));
    if (letter == 'V') return HatElement(HatMonomial::V(node, k));
    fail(std::string(1, letter) + " is not a variable of the hat ring (use W and V)");
    return {};
  };
  auto invert = [](const HatElement& x, const auto& fail) -> HatElement {
    if (x.size() != 1 || !x.begin()->first.is_one()) fail("negative powers of W and V are not allowed");
    return HatElement::scalar(invert_unit(x.begin()->second, fail));
  };
  return run_parser<HatElement>(text, atom, invert);
}

YElement parse_y(const CartanData& cd, std::string_view text) {
  auto atom = [&cd](char letter, int node, int k, const auto& fail) -> YElement {
    if (!cd.valid_node(node)) fail("node " + std::to_string(node) + " out of range");
    if (letter == 'Y') return YElement(YMonomial::Y(node, k));
    if (letter == 'A') return YElement(a_power(cd, node, k, 1));
    fail(std::string(1, letter) + " is not a variable of the y ring (use Y and A)");
    return {};
  };
  auto invert = [](const YElement& x, const auto& fail) -> YElement {
    if (x.size() != 1) fail("negative power of a sum");
    const auto& [m, c] = *x.begin();
    return YElement(m.inverse(), invert_unit(c, fail));
  };
  return run_parser<YElement>(text, atom, invert);
}

ClassicalElement parse_classical(const CartanData& cd, std::string_view text) { return pi_t(parse_y(cd, text)); }

HatMonomial parse_hat_monomial(const CartanData& cd, std::string_view text) {
  HatElement x = parse_hat(cd, text);
  if (x.size() != 1 || x.begin()->second != TPoly(1)) throw InputError("expected a single monomial");
  return x.begin()->first;
}

YMonomial parse_y_monomial(const CartanData& cd, std::string_view text) {
  YElement x = parse_y(cd, text);
  if (x.size() != 1 || x.begin()->second != TPoly(1)) throw InputError("expected a single monomial");
  return x.begin()->first;
}

namespace {

const char* kDot = "\xC2\xB7";

void render_factors(std::ostringstream& os, bool& first, char letter, const ExponentMap& e) {
  for (const auto& [p, x] : e) {
    if (!first) os << kDot;
    first = false;
    os << letter << '[' << p.node << ',' << p.k << ']';
    if (x != 1) os << '^' << x;
  }
}

/// Splits a coefficient into a sign and the text to print before the monomial.
std::pair<bool, std::string> coeff_text(const TPoly& c) {
  if (c.is_monomial()) {
    const int e = c.low_degree();
    const std::int64_t a = c.coeff(e);
    const bool neg = a < 0;
    const std::int64_t mag = neg ? -a : a;
    std::string s;
    if (mag != 1 || e == 0) s = std::to_string(mag);
    if (e != 0) {
      if (mag == 1) s.clear();
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return {neg, s};
  }
  return {false, "(" + c.to_string() + ")"};
}

std::pair<bool, std::string> coeff_text(std::int64_t c) {
  const bool neg = c < 0;
  return {neg, std::to_string(neg ? -c : c)};
}

template <class Coeff>
void append_term(std::ostringstream& os, bool& first, const Coeff& c, const std::string& body) {
  auto [neg, ctext] = coeff_text(c);
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  first = false;
  const bool unit = ctext == "1";
  if (body.empty()) {
    os << ctext;
  } else if (unit) {
    os << body;
  } else {
    os << ctext << kDot << body;
  }
}

template <class Element>
std::string render_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x) append_term(os, first, c, m.is_one() ? std::string() : render(m));
  return os.str();
}

template <class Screener>
std::string render_screener(const Screener& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : s) {
    std::string body = key.first.is_one() ? std::string() : render(key.first) + kDot;
    body += "S[" + std::to_string(s.node()) + "," + std::to_string(key.second) + "]";
    append_term(os, first, c, body);
  }
  return os.str();
}

}  // namespace

std::string render(const HatMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  render_factors(os, first, 'W', m.w);
  render_factors(os, first, 'V', m.v);
  return os.str();
}

std::string render(const YMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  render_factors(os, first, 'Y', m.u);
  return os.str();
}

std::string render(const HatElement& x) { return render_element(x); }
std::string render(const YElement& x) { return render_element(x); }
std::string render(const ClassicalElement& x) { return render_element(x); }
std::string render(const HatScreener& s) { return render_screener(s); }
std::string render(const YScreener& s) { return render_screener(s); }
std::string render(const ClassicalScreener& s) { return render_screener(s); }

Json to_json(const TPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

TPoly tpoly_from_json(const Json& j) {
  if (j.is_number_integer()) return TPoly(j.get<std::int64_t>());
  if (!j.is_object()) throw InputError("TPoly JSON must be an object mapping exponents to integers");
  TPoly p;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != key.size() || !val.is_number_integer()) throw InputError("bad TPoly JSON entry '" + key + "'");
    p += TPoly::monomial(val.get<std::int64_t>(), e);
  }
  return p;
}

Json to_json(const ExponentMap& e) {
  Json j = Json::object();
  for (const auto& [p, x] : e) j[std::to_string(p.node) + "," + std::to_string(p.k)] = x;
  return j;
}

namespace {

ExponentMap exponents_from_json(const Json& j, bool nonnegative) {
  if (!j.is_object()) throw InputError("exponent map JSON must be an object");
  ExponentMap out;
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || !val.is_number_integer()) throw InputError("bad exponent key '" + key + "'");
    int node = 0;
    int k = 0;
    try {
      node = std::stoi(key.substr(0, comma));
      k = std::stoi(key.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw InputError("bad exponent key '" + key + "'");
    }
    const int e = val.get<int>();
    if (nonnegative && e < 0) throw InputError("negative exponent in the hat ring");
    out.add(node, k, e);
  }
  return out;
}

}  // namespace

Json to_json(const HatMonomial& m) { return {{"V", to_json(m.v)}, {"W", to_json(m.w)}}; }
Json to_json(const YMonomial& m) { return {{"Y", to_json(m.u)}}; }

namespace {

template <class Element>
Json element_to_json(const Element& x) {
  Json arr = Json::array();
  for (const auto& [m, c] : x) {
    Json t = to_json(m);
    t["coeff"] = to_json_coeff(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

template <class Screener>
Json screener_to_json(const Screener& s, const std::string& ring) {
  Json arr = Json::array();
  for (const auto& [key, c] : s) arr.push_back({{"monomial", to_json(key.first)}, {"k", key.second}, {"coeff", to_json_coeff(c)}});
  return {{"node", s.node()}, {"ring", ring}, {"terms", arr}};
}

}  // namespace

Json to_json(const HatElement& x) { return element_to_json(x); }
Json to_json(const YElement& x) { return element_to_json(x); }
Json to_json(const ClassicalElement& x) { return element_to_json(x); }
Json to_json(const HatScreener& s) { return screener_to_json(s, "hat"); }
Json to_json(const YScreener& s) { return screener_to_json(s, "y"); }
Json to_json(const ClassicalScreener& s) { return screener_to_json(s, "classical"); }

HatElement hat_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("element JSON must be an array of terms");
  HatElement out;
  for (const auto& t : j) {
    HatMonomial m;
    if (t.contains("V")) m.v = exponents_from_json(t.at("V"), true);
    if (t.contains("W")) m.w = exponents_from_json(t.at("W"), true);
    out.add_term(m, t.contains("coeff") ? tpoly_from_json(t.at("coeff")) : TPoly(1));
  }
  return out;
}

YElement y_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("element JSON must be an array of terms");
  YElement out;
  for (const auto& t : j) {
    YMonomial m;
    if (t.contains("Y")) m.u = exponents_from_json(t.at("Y"), false);
    out.add_term(m, t.contains("coeff") ? tpoly_from_json(t.at("coeff")) : TPoly(1));
  }
  return out;
}

ClassicalElement classical_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("element JSON must be an array of terms");
  ClassicalElement out;
  for (const auto& t : j) {
    YMonomial m;
    if (t.contains("Y")) m.u = exponents_from_json(t.at("Y"), false);
    std::int64_t c = 1;
    if (t.contains("coeff")) {
      if (!t.at("coeff").is_number_integer()) throw InputError("classical coefficients are integers");
      c = t.at("coeff").get<std::int64_t>();
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace qtscreen
