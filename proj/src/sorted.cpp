#include "msetord/sorted.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "msetord/ground.hpp"

namespace msetord {

namespace {

struct Interval {
  int lo, hi;
};

bool augment(int i, const std::vector<Interval>& xs, const std::vector<Interval>& ss,
             std::vector<int>& owner, std::vector<char>& seen) {
  for (size_t k = 0; k < ss.size(); ++k) {
    if (seen[k] || xs[i].hi < ss[k].lo || ss[k].hi < xs[i].lo) continue;
    seen[k] = 1;
    if (owner[k] < 0 || augment(owner[k], xs, ss, owner, seen)) {
      owner[k] = i;
      return true;
    }
  }
  return false;
}

// A descending sort of some x in xs fits ss iff, once the ss intervals are made
// non-increasing at both ends, every x can be matched to an overlapping slot:
// swapping two out-of-order values keeps both inside their slots.
bool feasible(const std::vector<Interval>& xs, std::vector<Interval> ss) {
  const size_t n = ss.size();
  for (size_t k = 1; k < n; ++k) ss[k].hi = std::min(ss[k].hi, ss[k - 1].hi);
  for (size_t k = n - 1; k-- > 0;) ss[k].lo = std::max(ss[k].lo, ss[k + 1].lo);
  for (const Interval& s : ss)
    if (s.lo > s.hi) return false;
  std::vector<int> owner(n, -1);
  for (size_t i = 0; i < xs.size(); ++i) {
    std::vector<char> seen(n, 0);
    if (!augment(static_cast<int>(i), xs, ss, owner, seen)) return false;
  }
  return true;
}

std::vector<Interval> intervals(const std::vector<VarId>& vs, const VarStore& store) {
  std::vector<Interval> out;
  for (VarId v : vs) out.push_back({store.min(v), store.max(v)});
  return out;
}

// Moves the bounds of vs[idx] inwards until the value is witnessed.
bool tighten(VarStore& store, const std::vector<VarId>& vs, size_t idx,
             const std::function<bool(size_t, int)>& ok, bool& changed) {
  VarId v = vs[idx];
  while (!ok(idx, store.min(v))) {
    if (!store.set_min(v, store.min(v) + 1)) return false;
    changed = true;
  }
  while (!ok(idx, store.max(v))) {
    if (!store.set_max(v, store.max(v) - 1)) return false;
    changed = true;
  }
  return true;
}

}  // namespace

SortedPropagator::SortedPropagator(std::vector<VarId> x, std::vector<VarId> s)
    : x_(std::move(x)), s_(std::move(s)) {
  assert(x_.size() == s_.size());
}

std::vector<Watch> SortedPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : x_) w.push_back({v, kBoundsChanged});
  for (VarId v : s_) w.push_back({v, kBoundsChanged});
  return w;
}

PropStatus SortedPropagator::propagate(VarStore& store) {
  const size_t n = x_.size();
  bool changed = true;
  while (changed) {
    changed = false;
    GroundVector lo = sort_desc(floor_of(x_, store));
    GroundVector hi = sort_desc(ceiling_of(x_, store));
    for (size_t k = 0; k < n; ++k) {
      int a = store.min(s_[k]), b = store.max(s_[k]);
      if (!store.set_min(s_[k], lo[k]) || !store.set_max(s_[k], hi[k])) return PropStatus::Failed;
      if (k > 0 && !store.set_max(s_[k], store.max(s_[k - 1]))) return PropStatus::Failed;
      changed |= a != store.min(s_[k]) || b != store.max(s_[k]);
    }
    for (size_t k = n; k-- > 1;) {
      int a = store.min(s_[k - 1]);
      if (!store.set_min(s_[k - 1], store.min(s_[k]))) return PropStatus::Failed;
      changed |= a != store.min(s_[k - 1]);
    }
    if (!feasible(intervals(x_, store), intervals(s_, store))) return PropStatus::Failed;

    auto x_ok = [&](size_t i, int v) {
      std::vector<Interval> xs = intervals(x_, store);
      xs[i] = {v, v};
      return feasible(xs, intervals(s_, store));
    };
    auto s_ok = [&](size_t k, int v) {
      std::vector<Interval> ss = intervals(s_, store);
      ss[k] = {v, v};
      for (size_t j = 0; j < k; ++j) ss[j].lo = std::max(ss[j].lo, v);
      for (size_t j = k + 1; j < n; ++j) ss[j].hi = std::min(ss[j].hi, v);
      return feasible(intervals(x_, store), ss);
    };
    for (size_t i = 0; i < n; ++i)
      if (!tighten(store, x_, i, x_ok, changed)) return PropStatus::Failed;
    for (size_t k = 0; k < n; ++k)
      if (!tighten(store, s_, k, s_ok, changed)) return PropStatus::Failed;
  }
  return PropStatus::Active;
}

bool SortedPropagator::satisfied(const VarStore& store) const {
  return sort_desc(floor_of(x_, store)) == floor_of(s_, store);
}

}  // namespace msetord
