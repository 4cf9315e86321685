#include "msetord/basic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace msetord {

AllDifferentPropagator::AllDifferentPropagator(std::vector<VarId> vars) : vars_(std::move(vars)) {}

std::vector<Watch> AllDifferentPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : vars_) w.push_back({v, kInstantiated});
  return w;
}

PropStatus AllDifferentPropagator::propagate(VarStore& store) {
  std::vector<char> done(vars_.size(), 0);
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (done[i] || !store.fixed(vars_[i])) continue;
      done[i] = 1;
      int v = store.value(vars_[i]);
      for (size_t j = 0; j < vars_.size(); ++j) {
        if (j == i || !store.contains(vars_[j], v)) continue;
        if (!store.remove(vars_[j], v)) return PropStatus::Failed;
        if (store.fixed(vars_[j])) again = true;
      }
    }
  }
  return PropStatus::Active;
}

bool AllDifferentPropagator::satisfied(const VarStore& store) const {
  std::vector<int> vals;
  for (VarId v : vars_) vals.push_back(store.value(v));
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

TablePropagator::TablePropagator(std::vector<VarId> vars, std::vector<std::vector<int>> tuples)
    : vars_(std::move(vars)), tuples_(std::move(tuples)) {
#ifndef NDEBUG
  for (const auto& t : tuples_) assert(t.size() == vars_.size());
#endif
}

std::vector<Watch> TablePropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : vars_) w.push_back({v, kDomainChanged});
  return w;
}

PropStatus TablePropagator::propagate(VarStore& store) {
  const size_t n = vars_.size();
  std::vector<std::vector<int>> supported(n);
  bool any = false;
  for (const auto& t : tuples_) {
    bool live = true;
    for (size_t i = 0; i < n && live; ++i) live = store.contains(vars_[i], t[i]);
    if (!live) continue;
    any = true;
    for (size_t i = 0; i < n; ++i) supported[i].push_back(t[i]);
  }
  if (!any) return PropStatus::Failed;
  for (size_t i = 0; i < n; ++i) {
    auto& s = supported[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) == store.size(vars_[i])) continue;
    if (!store.filter(vars_[i], [&](int v) { return std::binary_search(s.begin(), s.end(), v); }))
      return PropStatus::Failed;
  }
  return PropStatus::Active;
}

bool TablePropagator::satisfied(const VarStore& store) const {
  for (const auto& t : tuples_) {
    bool match = true;
    for (size_t i = 0; i < vars_.size() && match; ++i) match = store.value(vars_[i]) == t[i];
    if (match) return true;
  }
  return false;
}

LinearPropagator::LinearPropagator(std::vector<long> coeffs, std::vector<VarId> vars, Relation rel,
                                   long rhs)
    : coeffs_(std::move(coeffs)), vars_(std::move(vars)), rel_(rel), rhs_(rhs) {
  assert(coeffs_.size() == vars_.size());
}

std::vector<Watch> LinearPropagator::watches() const {
  std::vector<Watch> w;
  for (VarId v : vars_) w.push_back({v, kBoundsChanged});
  return w;
}

namespace {
long floor_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
long ceil_div(long a, long b) { return -floor_div(-a, b); }
}  // namespace

PropStatus LinearPropagator::propagate(VarStore& store) {
  const size_t n = vars_.size();
  bool changed = true;
  while (changed) {
    changed = false;
    long lo = 0, hi = 0;
    for (size_t i = 0; i < n; ++i) {
      long c = coeffs_[i];
      lo += c * (c > 0 ? store.min(vars_[i]) : store.max(vars_[i]));
      hi += c * (c > 0 ? store.max(vars_[i]) : store.min(vars_[i]));
    }
    if (lo > rhs_ || (rel_ == Relation::Eq && hi < rhs_)) return PropStatus::Failed;
    for (size_t i = 0; i < n; ++i) {
      long c = coeffs_[i];
      if (c == 0) continue;
      VarId v = vars_[i];
      long my_lo = c * (c > 0 ? store.min(v) : store.max(v));
      long my_hi = c * (c > 0 ? store.max(v) : store.min(v));
      int old_min = store.min(v), old_max = store.max(v);
      auto clamp = [&](long b) {
        return static_cast<int>(std::clamp<long>(b, store.min(v) - 1L, store.max(v) + 1L));
      };
      // c * v <= rhs - (lo - my_lo)
      long up = rhs_ - (lo - my_lo);
      bool ok = c > 0 ? store.set_max(v, clamp(floor_div(up, c))) : store.set_min(v, clamp(ceil_div(up, c)));
      if (!ok) return PropStatus::Failed;
      if (rel_ == Relation::Eq) {
        // c * v >= rhs - (hi - my_hi)
        long down = rhs_ - (hi - my_hi);
        ok = c > 0 ? store.set_min(v, clamp(ceil_div(down, c))) : store.set_max(v, clamp(floor_div(down, c)));
        if (!ok) return PropStatus::Failed;
      }
      if (store.min(v) != old_min || store.max(v) != old_max) changed = true;
    }
  }
  return PropStatus::Active;
}

bool LinearPropagator::satisfied(const VarStore& store) const {
  long s = 0;
  for (size_t i = 0; i < vars_.size(); ++i) s += coeffs_[i] * store.value(vars_[i]);
  return rel_ == Relation::Le ? s <= rhs_ : s == rhs_;
}

ReifiedEqPropagator::ReifiedEqPropagator(VarId x, VarId y, VarId b) : x_(x), y_(y), b_(b) {}

std::vector<Watch> ReifiedEqPropagator::watches() const {
  return {{x_, kDomainChanged}, {y_, kDomainChanged}, {b_, kInstantiated}};
}

PropStatus ReifiedEqPropagator::propagate(VarStore& store) {
  if (!store.set_min(b_, 0) || !store.set_max(b_, 1)) return PropStatus::Failed;
  if (!store.fixed(b_)) {
    bool overlap = false;
    store.dom(x_).for_each([&](int v) { overlap = overlap || store.contains(y_, v); });
    if (!overlap) {
      store.assign(b_, 0);
      return PropStatus::Entailed;
    }
    if (store.fixed(x_) && store.fixed(y_)) {
      store.assign(b_, 1);
      return PropStatus::Entailed;
    }
    return PropStatus::Active;
  }
  if (store.value(b_) == 1) {
    if (!store.filter(x_, [&](int v) { return store.contains(y_, v); })) return PropStatus::Failed;
    if (!store.filter(y_, [&](int v) { return store.contains(x_, v); })) return PropStatus::Failed;
    return store.fixed(x_) ? PropStatus::Entailed : PropStatus::Active;
  }
  if (store.fixed(x_) && !store.remove(y_, store.value(x_))) return PropStatus::Failed;
  if (store.fixed(y_) && !store.remove(x_, store.value(y_))) return PropStatus::Failed;
  return store.fixed(x_) || store.fixed(y_) ? PropStatus::Entailed : PropStatus::Active;
}

bool ReifiedEqPropagator::satisfied(const VarStore& store) const {
  return store.value(b_) == (store.value(x_) == store.value(y_) ? 1 : 0);
}

ConditionalPropagator::ConditionalPropagator(VarId r1, VarId r2, std::unique_ptr<Propagator> body)
    : r1_(r1), r2_(r2), body_(std::move(body)) {}

std::vector<Watch> ConditionalPropagator::watches() const {
  std::vector<Watch> w{{r1_, kDomainChanged}, {r2_, kDomainChanged}};
  for (const Watch& b : body_->watches()) w.push_back(b);
  return w;
}

bool ConditionalPropagator::active(const VarStore& store) const {
  return store.fixed(r1_) && store.fixed(r2_) && store.value(r1_) == store.value(r2_);
}

bool ConditionalPropagator::wake(VarStore& store, int local, unsigned events) {
  if (local < 2) return true;
  bool wanted = body_->wake(store, local - 2, events);
  return wanted && active(store);
}

PropStatus ConditionalPropagator::propagate(VarStore& store) {
  if (active(store)) return body_->propagate(store);
  bool overlap = false;
  store.dom(r1_).for_each([&](int v) { overlap = overlap || store.contains(r2_, v); });
  return overlap ? PropStatus::Active : PropStatus::Entailed;
}

bool ConditionalPropagator::satisfied(const VarStore& store) const {
  return store.value(r1_) != store.value(r2_) || body_->satisfied(store);
}

}  // namespace msetord
