#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtscreen/monomial.hpp"

namespace qtscreen {

/// Cartan matrix of a finite-type semisimple Lie algebra with its symmetrizers.
///
/// Convention: for adjacent nodes of different root lengths, the entry in the
/// row of the short node j and column of the long node i is -r_i/r_j
/// (C[j][i] = -2 or -3). This is the transpose of the Bourbaki matrix; for
/// example B2 is [[2,-1],[-2,2]] with r = (2,1).
///
/// Immutable once constructed.
class CartanData {
 public:
  /// Validates C and r; throws InputError on any violated invariant.
  CartanData(std::vector<std::vector<int>> matrix, std::vector<int> symmetrizers);
  /// Computes the minimal symmetrizers.
  explicit CartanData(std::vector<std::vector<int>> matrix);

  int rank() const { return static_cast<int>(matrix_.size()); }
  /// 1-based entry C_{i,j}.
  int c(int i, int j) const { return matrix_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  /// Symmetrizer r_i, so q_i = q^{r_i}.
  int r(int i) const { return symmetrizers_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  bool valid_node(int i) const { return i >= 1 && i <= rank(); }
  void check_node(int i) const;
  /// Simply laced: every r_i equals 1.
  bool is_ade() const;

  /// Integer weights h_j > 0 such that every A_{i,a} has positive height
  /// sum_j h_j * (exponent of Y_j in A_{i,a}). Strictly increases along the
  /// monomial partial order.
  const std::vector<std::int64_t>& height_weights() const { return heights_; }
  std::int64_t height(const YMonomial& m) const;

  friend bool operator==(const CartanData& a, const CartanData& b) {
    return a.matrix_ == b.matrix_ && a.symmetrizers_ == b.symmetrizers_;
  }

 private:
  void validate() const;
  void compute_heights();

  std::vector<std::vector<int>> matrix_;
  std::vector<int> symmetrizers_;
  std::vector<std::int64_t> heights_;
};

/// Named finite type: "A3", "B_2", "sl2", "G2", or products such as "A1xA1".
CartanData load_cartan(std::string_view spec);

/// Exponent function of A_{i,q^k}^{-1}.
YMonomial a_inverse_monomial(const CartanData& cd, int i, int k);

/// Exponent function of A_{i,q^k}^{e} for any integer e.
YMonomial a_power(const CartanData& cd, int i, int k, int e);

}  // namespace qtscreen
