#include "msetord/arith.hpp"

#include <algorithm>
#include <cassert>

namespace msetord {

int ArithMsetPropagator::default_base(size_t nx, size_t ny) {
  if (nx == ny && nx >= 2) return static_cast<int>(nx);
  return static_cast<int>(std::max(nx, ny)) + 1;
}

ArithMsetPropagator::ArithMsetPropagator(const VarStore& store, std::vector<VarId> x,
                                         std::vector<VarId> y, bool strict)
    : ArithMsetPropagator(store, x, y, strict, default_base(x.size(), y.size())) {}

ArithMsetPropagator::ArithMsetPropagator(const VarStore& store, std::vector<VarId> x,
                                         std::vector<VarId> y, bool strict, int base)
    : x_(std::move(x)), y_(std::move(y)), strict_(strict), base_(base) {
  assert(base_ >= 2);
  std::vector<VarId> all(x_);
  all.insert(all.end(), y_.begin(), y_.end());
  map_ = value_map_of(all, store);
  BigInt w = 1;
  for (int r = 0; r < map_.size(); ++r) {
    weights_.push_back(w);
    w *= base_;
  }
}

std::vector<Watch> ArithMsetPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : x_) w.push_back({v, kMinChanged});
  for (VarId v : y_) w.push_back({v, kMaxChanged});
  return w;
}

PropStatus ArithMsetPropagator::propagate(VarStore& store) {
  BigInt lhs_min = 0, rhs_max = 0;
  for (VarId v : x_) lhs_min += weight(store.min(v));
  for (VarId v : y_) rhs_max += weight(store.max(v));
  if (strict_ ? lhs_min >= rhs_max : lhs_min > rhs_max) return PropStatus::Failed;

  for (VarId v : x_) {
    if (store.fixed(v)) continue;
    BigInt room = rhs_max - (lhs_min - weight(store.min(v)));
    int hi = store.max(v);
    while (strict_ ? weight(hi) >= room : weight(hi) > room) hi = store.dom(v).prev_leq(hi - 1);
    if (!store.set_max(v, hi)) return PropStatus::Failed;
  }
  for (VarId v : y_) {
    if (store.fixed(v)) continue;
    BigInt need = lhs_min - (rhs_max - weight(store.max(v)));
    int lo = store.min(v);
    while (strict_ ? weight(lo) <= need : weight(lo) < need) lo = store.dom(v).next_geq(lo + 1);
    if (!store.set_min(v, lo)) return PropStatus::Failed;
  }
  return PropStatus::Active;
}

bool ArithMsetPropagator::satisfied(const VarStore& store) const {
  BigInt lhs = 0, rhs = 0;
  for (VarId v : x_) lhs += weight(store.value(v));
  for (VarId v : y_) rhs += weight(store.value(v));
  return strict_ ? lhs < rhs : lhs <= rhs;
}

}  // namespace msetord
