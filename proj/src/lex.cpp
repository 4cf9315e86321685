#include "msetord/lex.hpp"

#include <cassert>

#include "msetord/ground.hpp"

namespace msetord {

LexPropagator::LexPropagator(std::vector<VarId> x, std::vector<VarId> y, bool strict)
    : x_(std::move(x)), y_(std::move(y)), strict_(strict) {
  assert(x_.size() == y_.size());
}

std::vector<Watch> LexPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : x_) w.push_back({v, kMinChanged});
  for (VarId v : y_) w.push_back({v, kMaxChanged});
  return w;
}

PropStatus LexPropagator::propagate(VarStore& store) {
  const size_t n = x_.size();
  size_t k = 0;
  while (k < n && store.min(x_[k]) == store.max(y_[k])) ++k;
  if (k == n) {
    if (strict_) return PropStatus::Failed;
  } else if (store.min(x_[k]) > store.max(y_[k])) {
    return PropStatus::Failed;
  }

  // Before k every pair is pinned to the shared value.
  for (size_t i = 0; i < k; ++i) {
    if (!store.set_max(x_[i], store.max(y_[i]))) return PropStatus::Failed;
    if (!store.set_min(y_[i], store.min(x_[i]))) return PropStatus::Failed;
  }
  if (k == n) return PropStatus::Active;

  // At k, equality is allowed only if the remaining suffix still satisfies.
  size_t m = k + 1;
  while (m < n && store.min(x_[m]) == store.max(y_[m])) ++m;
  bool tail_ok = m == n ? !strict_ : store.min(x_[m]) < store.max(y_[m]);
  int a = store.min(x_[k]), b = store.max(y_[k]);
  if (!store.set_max(x_[k], tail_ok ? b : b - 1)) return PropStatus::Failed;
  if (!store.set_min(y_[k], tail_ok ? a : a + 1)) return PropStatus::Failed;
  return PropStatus::Active;
}

bool LexPropagator::satisfied(const VarStore& store) const {
  Cmp c = lex_cmp(floor_of(x_, store), floor_of(y_, store));
  return strict_ ? c == Cmp::Less : c != Cmp::Greater;
}

}  // namespace msetord
