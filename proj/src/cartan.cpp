#include "qtscreen/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <string>

#include "qtscreen/errors.hpp"

namespace qtscreen {

namespace {

using Matrix = std::vector<std::vector<int>>;

// Fraction-free Gaussian elimination; exact for integer input.
std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix empty_matrix(int n) {
  return Matrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
}

void link(Matrix& c, int i, int j, int cij, int cji) {
  c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cij;
  c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = cji;
}

struct Named {
  Matrix c;
  std::vector<int> r;
};

Named simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  Named out{empty_matrix(n), std::vector<int>(static_cast<std::size_t>(n), 1)};
  for (int i = 0; i < n; ++i) out.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (auto [i, j] : edges) link(out.c, i, j, -1, -1);
  return out;
}

std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

Named named_type(char letter, int n, const std::string& full) {
  auto bad = [&] { return InputError("unknown or invalid Cartan type '" + full + "'"); };
  switch (letter) {
    case 'A':
      if (n < 1) throw bad();
      return simply_laced(n, path_edges(n));
    case 'B': {
      if (n < 2) throw bad();
      Named t = simply_laced(n, path_edges(n - 1));
      link(t.c, n - 1, n, -1, -2);
      for (int i = 1; i < n; ++i) t.r[static_cast<std::size_t>(i - 1)] = 2;
      return t;
    }
    case 'C': {
      if (n < 2) throw bad();
      Named t = simply_laced(n, path_edges(n - 1));
      link(t.c, n - 1, n, -2, -1);
      t.r[static_cast<std::size_t>(n - 1)] = 2;
      return t;
    }
    case 'D': {
      if (n < 4) throw bad();
      auto e = path_edges(n - 1);
      e.emplace_back(n - 2, n);
      return simply_laced(n, e);
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      std::vector<std::pair<int, int>> e{{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) e.emplace_back(i, i + 1);
      return simply_laced(n, e);
    }
    case 'F': {
      if (n != 4) throw bad();
      Named t = simply_laced(4, {{1, 2}, {3, 4}});
      link(t.c, 2, 3, -1, -2);
      t.r = {2, 2, 1, 1};
      return t;
    }
    case 'G': {
      if (n != 2) throw bad();
      Named t = simply_laced(2, {});
      link(t.c, 1, 2, -3, -1);
      t.r = {1, 3};
      return t;
    }
    default:
      throw bad();
  }
}

Named parse_factor(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != '_' && ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2) throw InputError("unknown Cartan type '" + raw + "'");
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  auto parse_int = [&](const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InputError("unknown Cartan type '" + raw + "'");
    return std::stoi(digits);
  };
  if (lower.rfind("sl", 0) == 0) return named_type('A', parse_int(lower.substr(2)) - 1, raw);
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return named_type(letter, parse_int(s.substr(1)), raw);
}

}  // namespace

CartanData::CartanData(Matrix matrix, std::vector<int> symmetrizers)
    : matrix_(std::move(matrix)), symmetrizers_(std::move(symmetrizers)) {
  validate();
  compute_heights();
}

CartanData::CartanData(Matrix matrix) : matrix_(std::move(matrix)) {
  const int n = rank();
  for (const auto& row : matrix_)
    if (static_cast<int>(row.size()) != n) throw InputError("Cartan matrix must be square");
  // r_j = r_i * C_ij / C_ji along edges, then clear denominators per component.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n), 0), den(static_cast<std::size_t>(n), 1);
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int comp = 0;
  for (int start = 0; start < n; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    std::queue<int> todo;
    todo.push(start);
    component[static_cast<std::size_t>(start)] = comp;
    num[static_cast<std::size_t>(start)] = 1;
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        int cij = matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int cji = matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (i == j || cij == 0 || cji == 0) continue;
        if (component[static_cast<std::size_t>(j)] >= 0) continue;
        component[static_cast<std::size_t>(j)] = comp;
        std::int64_t nn = num[static_cast<std::size_t>(i)] * cij;
        std::int64_t dd = den[static_cast<std::size_t>(i)] * cji;
        if (dd < 0) {
          nn = -nn;
          dd = -dd;
        }
        std::int64_t g = std::gcd(nn, dd);
        num[static_cast<std::size_t>(j)] = nn / g;
        den[static_cast<std::size_t>(j)] = dd / g;
        todo.push(j);
      }
    }
    ++comp;
  }
  symmetrizers_.assign(static_cast<std::size_t>(n), 1);
  for (int c = 0; c < comp; ++c) {
    std::int64_t l = 1;
    for (int i = 0; i < n; ++i)
      if (component[static_cast<std::size_t>(i)] == c) l = std::lcm(l, den[static_cast<std::size_t>(i)]);
    std::int64_t g = 0;
    for (int i = 0; i < n; ++i)
      if (component[static_cast<std::size_t>(i)] == c)
        g = std::gcd(g, num[static_cast<std::size_t>(i)] * (l / den[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i)
      if (component[static_cast<std::size_t>(i)] == c) {
        std::int64_t v = num[static_cast<std::size_t>(i)] * (l / den[static_cast<std::size_t>(i)]) / g;
        // Non-positive values are left for validate() to reject.
        symmetrizers_[static_cast<std::size_t>(i)] = static_cast<int>(v);
      }
  }
  validate();
  compute_heights();
}

void CartanData::check_node(int i) const {
  if (!valid_node(i))
    throw InputError("node " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

bool CartanData::is_ade() const {
  return std::all_of(symmetrizers_.begin(), symmetrizers_.end(), [](int x) { return x == 1; });
}

void CartanData::validate() const {
  const int n = rank();
  if (n == 0) throw InputError("Cartan matrix is empty");
  if (static_cast<int>(symmetrizers_.size()) != n) throw InputError("symmetrizer length differs from rank");
  for (const auto& row : matrix_)
    if (static_cast<int>(row.size()) != n) throw InputError("Cartan matrix must be square");
  for (int i = 1; i <= n; ++i) {
    if (r(i) <= 0) throw InputError("symmetrizers must be positive (matrix not symmetrizable)");
    if (c(i, i) != 2) throw InputError("diagonal entries of a Cartan matrix must be 2");
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) throw InputError("off-diagonal Cartan entries must be <= 0");
      if (c(i, j) < -3) throw InputError("off-diagonal Cartan entries must be >= -3");
      if ((c(i, j) == 0) != (c(j, i) == 0)) throw InputError("C[i][j] = 0 must imply C[j][i] = 0");
      if (r(i) * c(i, j) != r(j) * c(j, i)) throw InputError("Cartan matrix is not symmetrizable by r");
      // C[j][i] in {-2,-3} needs r_j = 1 and r_i = -C[j][i].
      if (c(j, i) <= -2 && (r(j) != 1 || r(i) != -c(j, i)))
        throw InputError("symmetrizers must be minimal (short root r = 1, long root r = -C[j][i])");
    }
  }
  // Finite type: the symmetrized matrix diag(r) C is positive definite.
  for (int size = 1; size <= n; ++size) {
    std::vector<std::vector<std::int64_t>> minor(static_cast<std::size_t>(size),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<std::int64_t>(r(i + 1)) * c(i + 1, j + 1);
    if (bareiss_det(minor) <= 0) throw InputError("Cartan matrix is not of finite type");
  }
}

void CartanData::compute_heights() {
  // C^T h = det(C) * 1 by Cramer's rule, then divided by the gcd.
  const int n = rank();
  std::vector<std::vector<std::int64_t>> ct(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c(j + 1, i + 1);
  heights_.assign(static_cast<std::size_t>(n), 0);
  std::int64_t g = 0;
  for (int col = 0; col < n; ++col) {
    auto m = ct;
    for (int row = 0; row < n; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 1;
    heights_[static_cast<std::size_t>(col)] = bareiss_det(m);
    g = std::gcd(g, heights_[static_cast<std::size_t>(col)]);
  }
  for (auto& h : heights_) h /= g;
}

std::int64_t CartanData::height(const YMonomial& m) const {
  std::int64_t s = 0;
  for (const auto& [p, e] : m.u) s += heights_[static_cast<std::size_t>(p.node - 1)] * e;
  return s;
}

CartanData load_cartan(std::string_view spec) {
  std::string s(spec);
  std::vector<Named> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find_first_of("xX", start);
    std::string piece = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    factors.push_back(parse_factor(piece));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  int n = 0;
  for (const auto& f : factors) n += static_cast<int>(f.r.size());
  Matrix c = empty_matrix(n);
  std::vector<int> r;
  int offset = 0;
  for (const auto& f : factors) {
    const int m = static_cast<int>(f.r.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        c[static_cast<std::size_t>(offset + i)][static_cast<std::size_t>(offset + j)] =
            f.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    r.insert(r.end(), f.r.begin(), f.r.end());
    offset += m;
  }
  return CartanData(std::move(c), std::move(r));
}

YMonomial a_inverse_monomial(const CartanData& cd, int i, int k) { return a_power(cd, i, k, -1); }

YMonomial a_power(const CartanData& cd, int i, int k, int e) {
  cd.check_node(i);
  YMonomial m;
  if (e == 0) return m;
  const int ri = cd.r(i);
  m.u.add(i, k - ri, e);
  m.u.add(i, k + ri, e);
  for (int j = 1; j <= cd.rank(); ++j) {
    if (j == i) continue;
    switch (cd.c(j, i)) {
      case -1:
        m.u.add(j, k, -e);
        break;
      case -2:
        m.u.add(j, k - 1, -e);
        m.u.add(j, k + 1, -e);
        break;
      case -3:
        m.u.add(j, k - 2, -e);
        m.u.add(j, k, -e);
        m.u.add(j, k + 2, -e);
        break;
      default:
        break;
    }
  }
  return m;
}

}  // namespace qtscreen
