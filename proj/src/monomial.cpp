#include "qtscreen/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtscreen {

ExponentMap::ExponentMap(std::initializer_list<Entry> entries) {
  for (const auto& [p, e] : entries) add(p, e);
}

int ExponentMap::get(SpectralIndex p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& en, const SpectralIndex& key) { return en.first < key; });
  return (it != entries_.end() && it->first == p) ? it->second : 0;
}

void ExponentMap::add(SpectralIndex p, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& en, const SpectralIndex& key) { return en.first < key; });
  if (it != entries_.end() && it->first == p) {
    it->second += e;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, {p, e});
  }
}

namespace {

std::vector<ExponentMap::Entry> merge(const std::vector<ExponentMap::Entry>& a,
                                      const std::vector<ExponentMap::Entry>& b, int sign) {
  std::vector<ExponentMap::Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      int e = i->second + sign * j->second;
      if (e != 0) out.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExponentMap& ExponentMap::operator+=(const ExponentMap& o) {
  if (!o.entries_.empty()) entries_ = merge(entries_, o.entries_, 1);
  return *this;
}

ExponentMap& ExponentMap::operator-=(const ExponentMap& o) {
  if (!o.entries_.empty()) entries_ = merge(entries_, o.entries_, -1);
  return *this;
}

ExponentMap ExponentMap::scaled(int factor) const {
  ExponentMap r;
  if (factor == 0) return r;
  r.entries_ = entries_;
  for (auto& en : r.entries_) en.second *= factor;
  return r;
}

bool ExponentMap::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& en) { return en.second >= 0; });
}

int ExponentMap::node_total(int node) const {
  int s = 0;
  for (const auto& [p, e] : entries_)
    if (p.node == node) s += e;
  return s;
}

std::vector<std::pair<int, int>> ExponentMap::on_node(int node) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [p, e] : entries_)
    if (p.node == node) out.emplace_back(p.k, e);
  return out;
}

std::pair<int, int> ExponentMap::k_range() const {
  if (entries_.empty()) throw std::logic_error("k_range of empty exponent map");
  int lo = entries_.front().first.k;
  int hi = lo;
  for (const auto& [p, e] : entries_) {
    lo = std::min(lo, p.k);
    hi = std::max(hi, p.k);
  }
  return {lo, hi};
}

HatMonomial HatMonomial::V(int node, int k, int e) {
  HatMonomial m;
  m.v.add(node, k, e);
  return m;
}

HatMonomial HatMonomial::W(int node, int k, int e) {
  HatMonomial m;
  m.w.add(node, k, e);
  return m;
}

HatMonomial& HatMonomial::operator*=(const HatMonomial& o) {
  v += o.v;
  w += o.w;
  return *this;
}

YMonomial YMonomial::Y(int node, int k, int e) {
  YMonomial m;
  m.u.add(node, k, e);
  return m;
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
  u += o.u;
  return *this;
}

}  // namespace qtscreen
