#include "msetord/domain.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace msetord {

namespace {
int words_for(int range) { return (range + 63) / 64; }
}  // namespace

Domain::Domain(int lo, int hi) {
  assert(lo <= hi);
  offset_ = lo;
  int range = hi - lo + 1;
  int nw = words_for(range);
  if (nw > 1) big_.assign(nw, 0);
  for (int i = 0; i < nw; ++i) {
    int bits = std::min(64, range - 64 * i);
    word(i) = bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
  }
  min_ = lo;
  max_ = hi;
  size_ = range;
}

Domain::Domain(std::span<const int> values) {
  assert(!values.empty());
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  offset_ = *lo;
  int nw = words_for(*hi - *lo + 1);
  if (nw > 1) big_.assign(nw, 0);
  for (int v : values) {
    int idx = v - offset_;
    word(idx >> 6) |= uint64_t{1} << (idx & 63);
  }
  recount();
}

bool Domain::has_bit(int v) const {
  long idx = static_cast<long>(v) - offset_;
  if (idx < 0 || idx >= 64L * nwords()) return false;
  return (word(static_cast<int>(idx >> 6)) >> (idx & 63)) & 1;
}

void Domain::clear_bit(int v) {
  int idx = v - offset_;
  word(idx >> 6) &= ~(uint64_t{1} << (idx & 63));
}

bool Domain::contains(int v) const {
  return size_ > 0 && v >= min_ && v <= max_ && has_bit(v);
}

int Domain::next_geq(int v) const {
  if (size_ == 0 || v > max_) return max_ + 1;
  if (v <= min_) return min_;
  int idx = v - offset_;
  int w = idx >> 6;
  uint64_t bits = word(w) & (~uint64_t{0} << (idx & 63));
  while (bits == 0) {
    if (++w >= nwords()) return max_ + 1;
    bits = word(w);
  }
  return offset_ + 64 * w + std::countr_zero(bits);
}

int Domain::prev_leq(int v) const {
  if (size_ == 0 || v < min_) return min_ - 1;
  if (v >= max_) return max_;
  int idx = v - offset_;
  int w = idx >> 6;
  int sh = 63 - (idx & 63);
  uint64_t bits = (word(w) << sh) >> sh;
  while (bits == 0) {
    if (--w < 0) return min_ - 1;
    bits = word(w);
  }
  return offset_ + 64 * w + 63 - std::countl_zero(bits);
}

void Domain::recount() {
  size_ = 0;
  int first = -1, last = -1;
  for (int i = 0; i < nwords(); ++i) {
    uint64_t b = word(i);
    if (b == 0) continue;
    size_ += std::popcount(b);
    if (first < 0) first = 64 * i + std::countr_zero(b);
    last = 64 * i + 63 - std::countl_zero(b);
  }
  if (size_ > 0) {
    min_ = offset_ + first;
    max_ = offset_ + last;
  }
}

bool Domain::remove(int v) {
  if (!contains(v)) return false;
  clear_bit(v);
  --size_;
  if (size_ == 0) return true;
  if (v == min_) min_ = next_geq(v + 1);
  if (v == max_) max_ = prev_leq(v - 1);
  return true;
}

bool Domain::set_min(int v) {
  if (size_ == 0 || v <= min_) return false;
  if (v > max_) {
    size_ = 0;
    return true;
  }
  int idx = v - offset_;
  for (int i = 0; i < (idx >> 6); ++i) word(i) = 0;
  word(idx >> 6) &= ~uint64_t{0} << (idx & 63);
  recount();
  return true;
}

bool Domain::set_max(int v) {
  if (size_ == 0 || v >= max_) return false;
  if (v < min_) {
    size_ = 0;
    return true;
  }
  int idx = v - offset_;
  int w = idx >> 6;
  int keep = (idx & 63) + 1;
  if (keep < 64) word(w) &= (uint64_t{1} << keep) - 1;
  for (int i = w + 1; i < nwords(); ++i) word(i) = 0;
  recount();
  return true;
}

bool Domain::assign(int v) {
  if (!contains(v)) {
    if (size_ == 0) return false;
    size_ = 0;
    return true;
  }
  if (size_ == 1) return false;
  for (int i = 0; i < nwords(); ++i) word(i) = 0;
  int idx = v - offset_;
  word(idx >> 6) |= uint64_t{1} << (idx & 63);
  min_ = max_ = v;
  size_ = 1;
  return true;
}

std::vector<int> Domain::values() const {
  std::vector<int> out;
  out.reserve(size_);
  if (size_ > 0) for_each([&](int v) { out.push_back(v); });
  return out;
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.size_ != b.size_) return false;
  if (a.size_ == 0) return true;
  return a.min_ == b.min_ && a.max_ == b.max_ && a.values() == b.values();
}

VarId VarStore::new_var(int lo, int hi) {
  doms_.emplace_back(lo, hi);
  saved_in_.push_back(0);
  pending_mask_.push_back(0);
  return num_vars() - 1;
}

VarId VarStore::new_var(std::span<const int> values) {
  doms_.emplace_back(values);
  saved_in_.push_back(0);
  pending_mask_.push_back(0);
  return num_vars() - 1;
}

void VarStore::save(VarId x) {
  if (marks_.empty() || saved_in_[x] == segment_) return;
  dom_trail_.push_back({x, doms_[x]});
  saved_in_[x] = segment_;
}

void VarStore::notify(VarId x, int old_min, int old_max, int old_size) {
  const Domain& d = doms_[x];
  if (d.size() == old_size) return;
  unsigned m = kDomainChanged;
  if (d.empty()) {
    m |= kMinChanged | kMaxChanged;
  } else {
    if (d.min() != old_min) m |= kMinChanged;
    if (d.max() != old_max) m |= kMaxChanged;
    if (d.fixed()) m |= kInstantiated;
  }
  if (pending_mask_[x] == 0) events_.push_back({x, 0});
  pending_mask_[x] |= m;
}

template <class Op>
bool VarStore::mutate(VarId x, Op&& op) {
  Domain& d = doms_[x];
  if (d.empty()) return false;
  int omin = d.min(), omax = d.max(), osize = d.size();
  save(x);
  if (op(d)) notify(x, omin, omax, osize);
  return !d.empty();
}

bool VarStore::set_min(VarId x, int v) {
  if (v <= doms_[x].min()) return !doms_[x].empty();
  return mutate(x, [v](Domain& d) { return d.set_min(v); });
}

bool VarStore::set_max(VarId x, int v) {
  if (v >= doms_[x].max()) return !doms_[x].empty();
  return mutate(x, [v](Domain& d) { return d.set_max(v); });
}

bool VarStore::assign(VarId x, int v) {
  if (doms_[x].fixed() && doms_[x].min() == v) return true;
  return mutate(x, [v](Domain& d) { return d.assign(v); });
}

bool VarStore::remove(VarId x, int v) {
  if (!doms_[x].contains(v)) return !doms_[x].empty();
  return mutate(x, [v](Domain& d) { return d.remove(v); });
}

bool VarStore::remove_all(VarId x, std::span<const int> values) {
  return mutate(x, [values](Domain& d) {
    bool changed = false;
    for (int v : values) changed |= d.remove(v);
    return changed;
  });
}

void VarStore::checkpoint() {
  marks_.push_back({dom_trail_.size(), cells_.size(), segment_});
  segment_ = next_segment_++;
}

void VarStore::restore() {
  assert(!marks_.empty());
  Mark m = marks_.back();
  marks_.pop_back();
  while (dom_trail_.size() > m.doms) {
    DomainUndo& u = dom_trail_.back();
    doms_[u.var] = std::move(u.old);
    dom_trail_.pop_back();
  }
  while (cells_.size() > m.cells) {
    *cells_.back().cell = cells_.back().old;
    cells_.pop_back();
  }
  segment_ = m.segment;
  clear_events();
}

std::vector<PendingEvent> VarStore::take_events() {
  std::vector<PendingEvent> out;
  out.swap(events_);
  for (PendingEvent& e : out) {
    e.mask = pending_mask_[e.var];
    pending_mask_[e.var] = 0;
  }
  return out;
}

void VarStore::clear_events() {
  for (const PendingEvent& e : events_) pending_mask_[e.var] = 0;
  events_.clear();
}

}  // namespace msetord
