#include "msetord/mset.hpp"

#include <cassert>

namespace msetord {

std::optional<Pointers> set_flags_occ(const OccVector& ox, const OccVector& oy, MsetOrder order) {
  assert(ox.u == oy.u && ox.l == oy.l);
  const bool strict = order == MsetOrder::Less;
  const int l = ox.l;
  Pointers p;

  int i = ox.u;
  while (i >= l && ox.at(i) == oy.at(i)) --i;
  if (i < l) {
    if (strict) return std::nullopt;
    return p;
  }
  if (ox.at(i) > oy.at(i)) return std::nullopt;
  p.alpha = i;

  if (p.alpha > l) {
    bool between_equal = true;
    int j = p.alpha - 1;
    for (; j >= l && ox.at(j) <= oy.at(j); --j) {
      if (ox.at(j) < oy.at(j)) between_equal = false;
    }
    if (j >= l) {
      p.beta = j;
      p.gamma = between_equal;
    }
  }

  if (p.beta != kNegInf) {
    int k = p.beta - 1;
    while (k >= l && ox.at(k) == oy.at(k)) --k;
    p.sigma = k >= l ? ox.at(k) > oy.at(k) : strict;
  }
  return p;
}

namespace {

int count_of(std::span<const int> s, int v) {
  auto [lo, hi] = std::equal_range(s.begin(), s.end(), v, std::greater<>());
  return static_cast<int>(hi - lo);
}

}  // namespace

std::optional<Support> set_flags_sorted(std::span<const int> sx, std::span<const int> sy,
                                        MsetOrder order) {
  assert(sx.size() == sy.size());
  const bool strict = order == MsetOrder::Less;
  const size_t n = sx.size();
  Support s;

  size_t i = 0;
  while (i < n && sx[i] == sy[i]) ++i;
  if (i == n) {
    if (strict) return std::nullopt;
    return s;
  }
  if (sx[i] > sy[i]) return std::nullopt;
  s.p.alpha = sy[i];

  // beta: walk the rest of X against Y past the run of alpha in Y.
  s.p.gamma = true;
  size_t j = i + 1;
  while (j < n && sy[j] == sy[j - 1]) ++j;
  bool found = false;
  while (i < n && j < n) {
    if (sx[i] > sy[j]) {
      found = true;
      break;
    }
    if (sx[i] < sy[j]) {
      s.p.gamma = false;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  if (!found && j < n) {
    // Only reachable for unequal totals; keep the occurrence semantics.
    s.p.gamma = false;
    return s;
  }
  s.p.beta = sx[i];

  // sigma: compare what lies below beta in both vectors.
  size_t k = i + 1;
  while (k < n && sx[k] == sx[k - 1]) ++k;
  while (k < n && j < n && sx[k] == sy[j]) {
    ++k;
    ++j;
  }
  if (k < n && j < n) {
    s.p.sigma = sx[k] > sy[j];
  } else if (k == n && j == n) {
    s.p.sigma = strict;
  } else {
    s.p.sigma = j == n;
  }

  s.ox_alpha = count_of(sx, s.p.alpha);
  s.oy_alpha = count_of(sy, s.p.alpha);
  s.ox_beta = count_of(sx, s.p.beta);
  s.oy_beta = count_of(sy, s.p.beta);
  return s;
}

MsetPropagator::MsetPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                               MsetOptions opt)
    : x_(std::move(x)), y_(std::move(y)), opt_(opt) {
  min_x_ = floor_of(x_, store);
  max_x_ = ceiling_of(x_, store);
  min_y_ = floor_of(y_, store);
  max_y_ = ceiling_of(y_, store);
}

std::vector<Watch> MsetPropagator::watches() const {
  std::vector<Watch> w;
  unsigned xe = opt_.entailment ? kBoundsChanged : kMinChanged;
  unsigned ye = opt_.entailment ? kBoundsChanged : kMaxChanged;
  for (VarId v : x_) w.push_back({v, xe});
  for (VarId v : y_) w.push_back({v, ye});
  return w;
}

bool MsetPropagator::sync_x(VarStore& store, int i) {
  bool changed = false;
  int lo = store.min(x_[i]);
  if (lo != min_x_[i]) {
    moved(store, Bound::XMin, min_x_[i], lo);
    store.write(min_x_[i], lo);
    changed = true;
  }
  if (opt_.entailment) {
    int hi = store.max(x_[i]);
    if (hi != max_x_[i]) {
      moved(store, Bound::XMax, max_x_[i], hi);
      store.write(max_x_[i], hi);
      changed = true;
    }
  }
  return changed;
}

bool MsetPropagator::sync_y(VarStore& store, int i) {
  bool changed = false;
  int hi = store.max(y_[i]);
  if (hi != max_y_[i]) {
    moved(store, Bound::YMax, max_y_[i], hi);
    store.write(max_y_[i], hi);
    changed = true;
  }
  if (opt_.entailment) {
    int lo = store.min(y_[i]);
    if (lo != min_y_[i]) {
      moved(store, Bound::YMin, min_y_[i], lo);
      store.write(min_y_[i], lo);
      changed = true;
    }
  }
  return changed;
}

bool MsetPropagator::wake(VarStore& store, int local, unsigned) {
  const int nx = static_cast<int>(x_.size());
  return local < nx ? sync_x(store, local) : sync_y(store, local - nx);
}

PropStatus MsetPropagator::mark_entailed(VarStore& store) {
  store.write(entailed_, 1);
  return PropStatus::Entailed;
}

PropStatus MsetPropagator::propagate(VarStore& store) {
  if (opt_.entailment) {
    if (entailed_) return PropStatus::Entailed;
    if (entailed_now()) return mark_entailed(store);
  }
  std::optional<Support> sup = support();
  if (!sup) return PropStatus::Failed;
  const Pointers& p = sup->p;
  // Both rules below need Y to have exactly one more alpha than X and nothing
  // but equality between alpha and beta.
  const bool tight_alpha = p.gamma && sup->ox_alpha + 1 == sup->oy_alpha;
  const bool beta_surplus_one = sup->ox_beta == sup->oy_beta + 1;

  for (int i = 0; i < static_cast<int>(x_.size()); ++i) {
    VarId v = x_[i];
    int lo = store.min(v), hi = store.max(v);
    if (lo == hi) continue;
    int bound = hi;
    if (lo >= p.alpha) {
      bound = lo;
    } else if (hi >= p.alpha) {
      bound = p.alpha;
      if (tight_alpha && (lo < p.beta || (lo == p.beta && (!beta_surplus_one || p.sigma))))
        bound = p.alpha - 1;
    }
    if (bound < hi) {
      if (!store.set_max(v, bound)) return PropStatus::Failed;
      if (opt_.entailment) sync_x(store, i);
    }
  }
  if (opt_.entailment && entailed_now()) return mark_entailed(store);

  for (int i = 0; i < static_cast<int>(y_.size()); ++i) {
    VarId v = y_[i];
    int lo = store.min(v), hi = store.max(v);
    if (lo == hi) continue;
    int bound = lo;
    if (hi > p.alpha) {
      bound = hi;
    } else if (hi == p.alpha && lo <= p.beta && tight_alpha) {
      bound = (beta_surplus_one && !p.sigma) ? p.beta : p.beta + 1;
    }
    if (bound > lo) {
      if (!store.set_min(v, bound)) return PropStatus::Failed;
      if (opt_.entailment) sync_y(store, i);
    }
  }
  if (opt_.entailment && entailed_now()) return mark_entailed(store);
  return PropStatus::Active;
}

bool MsetPropagator::satisfied(const VarStore& store) const {
  Cmp c = mset_cmp(floor_of(x_, store), floor_of(y_, store));
  return opt_.order == MsetOrder::Leq ? c != Cmp::Greater : c == Cmp::Less;
}

namespace {

std::vector<VarId> concat(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<int> ranks(const ValueMap& m, const GroundVector& g) {
  std::vector<int> out;
  out.reserve(g.size());
  for (int v : g) out.push_back(m.rank(v));
  return out;
}

}  // namespace

MsetOccPropagator::MsetOccPropagator(const VarStore& store, std::vector<VarId> x,
                                     std::vector<VarId> y, MsetOptions opt)
    : MsetPropagator(store, std::move(x), std::move(y), opt) {
  map_ = value_map_of(concat(x_, y_), store);
  const int u = map_.size() - 1;
  ox_ = occ_of(ranks(map_, floor_of(x_, store)), u, 0);
  oy_ = occ_of(ranks(map_, ceiling_of(y_, store)), u, 0);
  if (opt_.entailment) {
    ex_ = occ_of(ranks(map_, ceiling_of(x_, store)), u, 0);
    ey_ = occ_of(ranks(map_, floor_of(y_, store)), u, 0);
  }
}

void MsetOccPropagator::moved(VarStore& store, Bound b, int old_v, int new_v) {
  OccVector& o = b == Bound::XMin ? ox_ : b == Bound::YMax ? oy_ : b == Bound::XMax ? ex_ : ey_;
  move_occurrence(o, map_.rank(old_v), map_.rank(new_v),
                  [&store](int& c, int v) { store.write(c, v); });
}

std::optional<Support> MsetOccPropagator::support() const {
  std::optional<Pointers> p = set_flags_occ(ox_, oy_, opt_.order);
  if (!p) return std::nullopt;
  Support s;
  if (p->alpha != kNegInf) {
    s.ox_alpha = ox_.at(p->alpha);
    s.oy_alpha = oy_.at(p->alpha);
    s.p.alpha = map_.value(p->alpha);
  }
  if (p->beta != kNegInf) {
    s.ox_beta = ox_.at(p->beta);
    s.oy_beta = oy_.at(p->beta);
    s.p.beta = map_.value(p->beta);
  }
  s.p.gamma = p->gamma;
  s.p.sigma = p->sigma;
  return s;
}

bool MsetOccPropagator::entailed_now() const {
  Cmp c = lex_cmp(ex_, ey_);
  return opt_.order == MsetOrder::Leq ? c != Cmp::Greater : c == Cmp::Less;
}

MsetSortedPropagator::MsetSortedPropagator(const VarStore& store, std::vector<VarId> x,
                                           std::vector<VarId> y, MsetOptions opt)
    : MsetPropagator(store, std::move(x), std::move(y), opt) {
  assert(x_.size() == y_.size());
  sx_ = sort_desc(floor_of(x_, store));
  sy_ = sort_desc(ceiling_of(y_, store));
  if (opt_.entailment) {
    sex_ = sort_desc(ceiling_of(x_, store));
    sey_ = sort_desc(floor_of(y_, store));
  }
}

void MsetSortedPropagator::moved(VarStore& store, Bound b, int old_v, int new_v) {
  std::vector<int>& s = b == Bound::XMin ? sx_ : b == Bound::YMax ? sy_ : b == Bound::XMax ? sex_ : sey_;
  move_sorted(s, old_v, new_v, [&store](int& c, int v) { store.write(c, v); });
}

std::optional<Support> MsetSortedPropagator::support() const {
  return set_flags_sorted(sx_, sy_, opt_.order);
}

bool MsetSortedPropagator::entailed_now() const {
  Cmp c = lex_cmp(sex_, sey_);
  return opt_.order == MsetOrder::Leq ? c != Cmp::Greater : c == Cmp::Less;
}

}  // namespace msetord
