#include "qtscreen/tpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtscreen {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

TPoly::TPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

TPoly TPoly::monomial(std::int64_t coeff, int exponent) {
  TPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

TPoly TPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  TPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

std::int64_t TPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, std::int64_t>> TPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) out.emplace_back(low_ + static_cast<int>(j), coeffs_[j]);
  return out;
}

std::int64_t TPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

void TPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
    auto& slot = coeffs_[static_cast<std::size_t>(o.low_ - lo) + j];
    slot = checked_add(slot, o.coeffs_[j]);
  }
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) { return *this += -o; }

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    if (a.coeffs_[x] == 0) continue;
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y)
      r.coeffs_[x + y] = checked_add(r.coeffs_[x + y], checked_mul(a.coeffs_[x], b.coeffs_[y]));
  }
  r.normalize();
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::shift(int e) {
  if (!is_zero()) low_ += e;
  return *this;
}

TPoly TPoly::shifted(int e) const {
  TPoly r = *this;
  return r.shift(e);
}

std::strong_ordering operator<=>(const TPoly& a, const TPoly& b) {
  if (auto c = a.low_ <=> b.low_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                b.coeffs_.end());
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

TPoly t_integer(int u) {
  TPoly p;
  if (u >= 0) {
    for (int k = 0; k < u; ++k) p += TPoly::t_power(2 * k);
  } else {
    for (int k = 1; k <= -u; ++k) p -= TPoly::t_power(-2 * k);
  }
  return p;
}

TPoly gauss_binom(int n, int r) {
  if (n < 0) throw std::invalid_argument("gauss_binom: negative n");
  if (r < 0 || r > n) return {};
  if (r == 0 || r == n) return TPoly(1);

  static std::mutex mu;
  static std::map<std::pair<int, int>, TPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, r}); it != memo.end()) return it->second;
  }
  // [n,r] = t^{-r}[n-1,r] + t^{n-r}[n-1,r-1]
  TPoly value = gauss_binom(n - 1, r).shifted(-r) + gauss_binom(n - 1, r - 1).shifted(n - r);
  std::lock_guard lock(mu);
  memo.emplace(std::pair{n, r}, value);
  return value;
}

TPoly bar_t(const TPoly& p) {
  std::vector<std::pair<int, std::int64_t>> flipped;
  for (const auto& [e, c] : p.terms()) flipped.emplace_back(-e, c);
  return TPoly::from_terms(flipped);
}

std::optional<TPoly> divide_by_t_minus_1(const TPoly& p) {
  if (p.is_zero()) return TPoly{};
  if (p.eval_at_one() != 0) return std::nullopt;
  // Synthetic division from the top: q_{e-1} = p_e + q_e.
  const int lo = p.low_degree();
  const int hi = p.high_degree();
  std::vector<std::pair<int, std::int64_t>> q;
  std::int64_t carry = 0;
  for (int e = hi; e > lo; --e) {
    carry = checked_add(carry, p.coeff(e));
    q.emplace_back(e - 1, carry);
  }
  return TPoly::from_terms(q);
}

}  // namespace qtscreen
