#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qtscreen {

/// A lattice point (node, k) standing for the spectral parameter q^k at a node.
/// Nodes are 1-based.
struct SpectralIndex {
  int node = 1;
  int k = 0;

  friend auto operator<=>(const SpectralIndex&, const SpectralIndex&) = default;
  friend bool operator==(const SpectralIndex&, const SpectralIndex&) = default;
};

/// Finitely supported function SpectralIndex -> int, sorted, without zeros.
class ExponentMap {
 public:
  using Entry = std::pair<SpectralIndex, int>;

  ExponentMap() = default;
  ExponentMap(std::initializer_list<Entry> entries);

  int get(SpectralIndex p) const;
  int get(int node, int k) const { return get(SpectralIndex{node, k}); }
  void add(SpectralIndex p, int e);
  void add(int node, int k, int e) { add(SpectralIndex{node, k}, e); }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Pointwise sum (the exponent map of a product).
  ExponentMap& operator+=(const ExponentMap& o);
  ExponentMap& operator-=(const ExponentMap& o);
  friend ExponentMap operator+(ExponentMap a, const ExponentMap& b) { return a += b; }
  friend ExponentMap operator-(ExponentMap a, const ExponentMap& b) { return a -= b; }
  ExponentMap scaled(int factor) const;

  bool all_nonnegative() const;
  /// Sum of exponents on one node.
  int node_total(int node) const;
  /// Entries on one node, in increasing k.
  std::vector<std::pair<int, int>> on_node(int node) const;
  /// Smallest and largest k in the support; requires non-empty.
  std::pair<int, int> k_range() const;

  friend auto operator<=>(const ExponentMap&, const ExponentMap&) = default;
  friend bool operator==(const ExponentMap&, const ExponentMap&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Monomial prod V_{i,a}^{v} W_{i,a}^{w} of the polynomial ring in V and W.
struct HatMonomial {
  ExponentMap v;
  ExponentMap w;

  static HatMonomial V(int node, int k, int e = 1);
  static HatMonomial W(int node, int k, int e = 1);

  bool is_one() const { return v.empty() && w.empty(); }
  bool valid() const { return v.all_nonnegative() && w.all_nonnegative(); }

  HatMonomial& operator*=(const HatMonomial& o);
  friend HatMonomial operator*(HatMonomial a, const HatMonomial& b) { return a *= b; }

  friend auto operator<=>(const HatMonomial&, const HatMonomial&) = default;
  friend bool operator==(const HatMonomial&, const HatMonomial&) = default;
};

/// Laurent monomial prod Y_{i,a}^{u}.
struct YMonomial {
  ExponentMap u;

  static YMonomial Y(int node, int k, int e = 1);

  bool is_one() const { return u.empty(); }

  YMonomial& operator*=(const YMonomial& o);
  friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
  YMonomial inverse() const { return YMonomial{u.scaled(-1)}; }
  YMonomial pow(int e) const { return YMonomial{u.scaled(e)}; }

  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;
  friend bool operator==(const YMonomial&, const YMonomial&) = default;
};

}  // namespace qtscreen
