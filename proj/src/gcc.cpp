#include "msetord/gcc.hpp"

#include <algorithm>
#include <cassert>

namespace msetord {

GccPropagator::GccPropagator(GccSpec spec) : spec_(std::move(spec)) {
  assert(spec_.values.size() == spec_.occurrences.size());
  assert(std::is_sorted(spec_.values.rbegin(), spec_.values.rend()));
}

std::vector<Watch> GccPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : spec_.vars) w.push_back({v, kDomainChanged});
  for (VarId v : spec_.occurrences) w.push_back({v, kBoundsChanged});
  return w;
}

PropStatus GccPropagator::propagate(VarStore& store) {
  const auto& vals = spec_.values;
  const auto& occ = spec_.occurrences;
  const int n = static_cast<int>(spec_.vars.size());
  const int m = static_cast<int>(vals.size());

  for (VarId x : spec_.vars) {
    if (!store.filter(x, [&](int v) {
          return std::binary_search(vals.begin(), vals.end(), v, std::greater<>());
        }))
      return PropStatus::Failed;
  }

  std::vector<int> fixed(m), possible(m);
  bool changed = true;
  while (changed) {
    changed = false;
    std::fill(fixed.begin(), fixed.end(), 0);
    std::fill(possible.begin(), possible.end(), 0);
    for (VarId x : spec_.vars) {
      for (int j = 0; j < m; ++j) {
        if (!store.contains(x, vals[j])) continue;
        ++possible[j];
        if (store.fixed(x)) ++fixed[j];
      }
    }
    for (int j = 0; j < m; ++j) {
      if (!store.set_min(occ[j], fixed[j]) || !store.set_max(occ[j], possible[j]))
        return PropStatus::Failed;
    }
    long sum_min = 0, sum_max = 0;
    for (int j = 0; j < m; ++j) {
      sum_min += store.min(occ[j]);
      sum_max += store.max(occ[j]);
    }
    for (int j = 0; j < m; ++j) {
      long lo = n - (sum_max - store.max(occ[j]));
      long hi = n - (sum_min - store.min(occ[j]));
      int old_lo = store.min(occ[j]), old_hi = store.max(occ[j]);
      if (!store.set_min(occ[j], static_cast<int>(std::max<long>(lo, old_lo))) ||
          !store.set_max(occ[j], static_cast<int>(std::min<long>(hi, old_hi))))
        return PropStatus::Failed;
      if (store.min(occ[j]) != old_lo || store.max(occ[j]) != old_hi) changed = true;
    }
    for (int j = 0; j < m; ++j) {
      if (store.max(occ[j]) == fixed[j] && possible[j] > fixed[j]) {
        for (VarId x : spec_.vars) {
          if (store.fixed(x) || !store.contains(x, vals[j])) continue;
          if (!store.remove(x, vals[j])) return PropStatus::Failed;
          changed = true;
        }
      } else if (store.min(occ[j]) == possible[j] && possible[j] > fixed[j]) {
        for (VarId x : spec_.vars) {
          if (store.fixed(x) || !store.contains(x, vals[j])) continue;
          if (!store.assign(x, vals[j])) return PropStatus::Failed;
          changed = true;
        }
      }
    }
  }
  return PropStatus::Active;
}

bool GccPropagator::satisfied(const VarStore& store) const {
  for (size_t j = 0; j < spec_.values.size(); ++j) {
    int c = 0;
    for (VarId x : spec_.vars) c += store.value(x) == spec_.values[j];
    if (c != store.value(spec_.occurrences[j])) return false;
  }
  for (VarId x : spec_.vars) {
    if (std::find(spec_.values.begin(), spec_.values.end(), store.value(x)) == spec_.values.end())
      return false;
  }
  return true;
}

}  // namespace msetord
