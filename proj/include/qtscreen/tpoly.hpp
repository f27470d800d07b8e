#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtscreen {

/// Laurent polynomial in t with exact integer coefficients.
///
/// Stored densely as a lowest exponent plus a coefficient vector with nonzero
/// first and last entries. Zero is the empty vector.
class TPoly {
 public:
  TPoly() = default;
  TPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static TPoly monomial(std::int64_t coeff, int exponent);
  static TPoly t_power(int exponent) { return monomial(1, exponent); }
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static TPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  /// Single term c·t^e.
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  std::int64_t constant_term() const { return coeff(0); }
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  /// Value at t = 1.
  std::int64_t eval_at_one() const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly operator-() const;
  /// Multiplication by t^e.
  TPoly shifted(int e) const;
  TPoly& shift(int e);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  friend bool operator==(const TPoly&, const TPoly&) = default;
  friend std::strong_ordering operator<=>(const TPoly& a, const TPoly& b);

  /// Human-readable form, e.g. "t^-2 + 1 + 3t^2". Zero renders as "0".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// t-integer: sum_{k=0}^{u-1} t^{2k} for u >= 0, and -sum_{k=1}^{-u} t^{-2k} for u < 0.
TPoly t_integer(int u);

/// Symmetric Gaussian binomial, from [n,0] = [n,n] = 1 and
/// [p+1,r] = t^{-r}[p,r] + t^{p+1-r}[p,r-1]. Zero for r outside [0, n].
TPoly gauss_binom(int n, int r);

/// Substitution t -> t^{-1}.
TPoly bar_t(const TPoly& p);

/// Quotient q with p = (t - 1) q, or nullopt when p(1) != 0.
std::optional<TPoly> divide_by_t_minus_1(const TPoly& p);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace qtscreen
