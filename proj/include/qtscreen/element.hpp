#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "qtscreen/monomial.hpp"
#include "qtscreen/tpoly.hpp"

namespace qtscreen {

inline bool coeff_is_zero(const TPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(std::int64_t c) { return c == 0; }

inline TPoly coeff_mul(const TPoly& a, const TPoly& b) { return a * b; }
inline std::int64_t coeff_mul(std::int64_t a, std::int64_t b) { return detail::checked_mul(a, b); }
inline void coeff_add(TPoly& a, const TPoly& b) { a += b; }
inline void coeff_add(std::int64_t& a, std::int64_t b) { a = detail::checked_add(a, b); }

/// Finitely supported linear combination of monomials, kept canonical:
/// terms sorted by monomial and no zero coefficients.
template <class Mono, class Coeff>
class LinearCombination {
 public:
  using Monomial = Mono;
  using Coefficient = Coeff;
  using Map = std::map<Mono, Coeff>;

  LinearCombination() = default;
  explicit LinearCombination(const Mono& m, Coeff c = Coeff(1)) { add_term(m, std::move(c)); }
  static LinearCombination scalar(Coeff c) { return LinearCombination(Mono{}, std::move(c)); }

  void add_term(const Mono& m, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      coeff_add(it->second, c);
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero or a multiple of the unit monomial.
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{}); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, coeff_mul(c, Coeff(-1)));
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  LinearCombination operator-() const { return scaled(Coeff(-1)); }

  LinearCombination scaled(const Coeff& c) const {
    LinearCombination r;
    for (const auto& [m, x] : terms_) r.add_term(m, coeff_mul(x, c));
    return r;
  }

  /// Commutative product.
  friend LinearCombination operator*(const LinearCombination& a, const LinearCombination& b) {
    LinearCombination r;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) r.add_term(m1 * m2, coeff_mul(c1, c2));
    return r;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Map terms_;
};

using HatElement = LinearCombination<HatMonomial, TPoly>;
using YElement = LinearCombination<YMonomial, TPoly>;
/// Element of the classical ring, where t = 1.
using ClassicalElement = LinearCombination<YMonomial, std::int64_t>;

/// Sum of coeff * monomial * S_{node,k} with every S symbol on the right.
template <class Mono, class Coeff>
class ScreenerElement {
 public:
  using Monomial = Mono;
  using Coefficient = Coeff;
  using Key = std::pair<Mono, int>;
  using Map = std::map<Key, Coeff>;

  ScreenerElement() = default;
  explicit ScreenerElement(int node) : node_(node) {}

  int node() const { return node_; }
  void add_term(const Mono& m, int k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(Key{m, k}, c);
    if (!inserted) {
      coeff_add(it->second, c);
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  Coeff coeff(const Mono& m, int k) const {
    auto it = terms_.find(Key{m, k});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ScreenerElement& operator+=(const ScreenerElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
  }
  ScreenerElement& operator-=(const ScreenerElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, coeff_mul(c, Coeff(-1)));
    return *this;
  }
  friend ScreenerElement operator+(ScreenerElement a, const ScreenerElement& b) { return a += b; }
  friend ScreenerElement operator-(ScreenerElement a, const ScreenerElement& b) { return a -= b; }

  ScreenerElement scaled(const Coeff& c) const {
    ScreenerElement r(node_);
    for (const auto& [key, x] : terms_) r.add_term(key.first, key.second, coeff_mul(x, c));
    return r;
  }

  /// Equal terms; the node label of zero elements is ignored.
  friend bool operator==(const ScreenerElement& a, const ScreenerElement& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.node_ == b.node_ && a.terms_ == b.terms_;
  }

 private:
  int node_ = 1;
  Map terms_;
};

using HatScreener = ScreenerElement<HatMonomial, TPoly>;
using YScreener = ScreenerElement<YMonomial, TPoly>;
using ClassicalScreener = ScreenerElement<YMonomial, std::int64_t>;

}  // namespace qtscreen
