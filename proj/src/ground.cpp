#include "msetord/ground.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace msetord {

GroundVector floor_of(std::span<const VarId> xs, const VarStore& store) {
  GroundVector out;
  out.reserve(xs.size());
  for (VarId x : xs) out.push_back(store.min(x));
  return out;
}

GroundVector ceiling_of(std::span<const VarId> xs, const VarStore& store) {
  GroundVector out;
  out.reserve(xs.size());
  for (VarId x : xs) out.push_back(store.max(x));
  return out;
}

OccVector occ_of(std::span<const int> x, int u, int l) {
  assert(u >= l);
  OccVector o{std::vector<int>(u - l + 1, 0), u, l};
  for (int v : x) {
    assert(v >= l && v <= u);
    ++o.at(v);
  }
  return o;
}

GroundVector sort_desc(GroundVector x) {
  std::sort(x.begin(), x.end(), std::greater<>());
  return x;
}

Cmp lex_cmp(std::span<const int> a, std::span<const int> b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return Cmp::Less;
    if (a[i] > b[i]) return Cmp::Greater;
  }
  return Cmp::Equal;
}

Cmp lex_cmp(const OccVector& a, const OccVector& b) {
  assert(a.u == b.u && a.l == b.l);
  return lex_cmp(a.counts, b.counts);
}

Cmp mset_cmp(std::span<const int> a, std::span<const int> b) {
  GroundVector x = sort_desc(GroundVector(a.begin(), a.end()));
  GroundVector y = sort_desc(GroundVector(b.begin(), b.end()));
  size_t i = 0;
  for (; i < x.size() && i < y.size(); ++i) {
    if (x[i] < y[i]) return Cmp::Less;
    if (x[i] > y[i]) return Cmp::Greater;
  }
  if (x.size() == y.size()) return Cmp::Equal;
  return i == x.size() ? Cmp::Less : Cmp::Greater;
}

ValueMap::ValueMap(std::vector<int> sorted_values) : values_(std::move(sorted_values)) {
  assert(std::is_sorted(values_.begin(), values_.end()));
  if (values_.empty()) return;
  long range = static_cast<long>(values_.back()) - values_.front() + 1;
  if (range <= (1L << 20)) {
    dense_.assign(range, -1);
    for (int r = 0; r < size(); ++r) dense_[values_[r] - values_.front()] = r;
  }
}

int ValueMap::rank(int value) const {
  if (!dense_.empty()) {
    long i = static_cast<long>(value) - values_.front();
    assert(i >= 0 && i < static_cast<long>(dense_.size()) && dense_[i] >= 0);
    return dense_[i];
  }
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  assert(it != values_.end() && *it == value);
  return static_cast<int>(it - values_.begin());
}

Normalized normalize_values(std::span<const std::vector<int>> domains) {
  std::vector<int> all;
  for (const auto& d : domains) {
    assert(!d.empty());
    all.insert(all.end(), d.begin(), d.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Normalized out{ValueMap(std::move(all)), {}};
  for (const auto& d : domains) {
    std::vector<int> r;
    for (int v : d) r.push_back(out.map.rank(v));
    out.domains.push_back(std::move(r));
  }
  return out;
}

ValueMap value_map_of(std::span<const VarId> xs, const VarStore& store) {
  std::vector<int> all;
  for (VarId x : xs) store.dom(x).for_each([&](int v) { all.push_back(v); });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return ValueMap(std::move(all));
}

}  // namespace msetord
