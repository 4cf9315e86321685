#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace msetord {

using VarId = int;

// Finite integer domain stored as a bitset over [offset, offset + 64 * words).
// Ranges up to 64 values live inline so copying a small domain never allocates.
class Domain {
 public:
  Domain() = default;
  Domain(int lo, int hi);
  explicit Domain(std::span<const int> values);

  int min() const { return min_; }
  int max() const { return max_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool fixed() const { return size_ == 1; }
  bool contains(int v) const;

  // Smallest member >= v, or max() + 1 if none; largest member <= v, or min() - 1.
  int next_geq(int v) const;
  int prev_leq(int v) const;

  // Each returns true when the domain changed. Emptying the domain is allowed;
  // callers detect it through empty().
  bool remove(int v);
  bool set_min(int v);
  bool set_max(int v);
  bool assign(int v);

  std::vector<int> values() const;

  template <class F>
  void for_each(F&& f) const {
    for (int v = min_; v <= max_; v = next_geq(v + 1)) f(v);
  }

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  int nwords() const { return static_cast<int>(big_.empty() ? 1 : big_.size()); }
  uint64_t& word(int i) { return big_.empty() ? small_ : big_[i]; }
  uint64_t word(int i) const { return big_.empty() ? small_ : big_[i]; }
  bool has_bit(int v) const;
  void clear_bit(int v);
  void recount();

  int offset_ = 0;
  uint64_t small_ = 0;
  std::vector<uint64_t> big_;
  int min_ = 0;
  int max_ = -1;
  int size_ = 0;
};

enum Event : unsigned {
  kMinChanged = 1u,
  kMaxChanged = 2u,
  kInstantiated = 4u,
  kDomainChanged = 8u,
  kBoundsChanged = kMinChanged | kMaxChanged,
  kAnyEvent = 15u,
};

struct PendingEvent {
  VarId var;
  unsigned mask;
};

// Variables plus a trail. Domains are saved at most once per checkpoint segment;
// integer cells registered through write() are saved on every write.
class VarStore {
 public:
  VarId new_var(int lo, int hi);
  VarId new_var(std::span<const int> values);
  VarId new_const(int v) { return new_var(v, v); }

  int num_vars() const { return static_cast<int>(doms_.size()); }
  const Domain& dom(VarId x) const { return doms_[x]; }
  int min(VarId x) const { return doms_[x].min(); }
  int max(VarId x) const { return doms_[x].max(); }
  int size(VarId x) const { return doms_[x].size(); }
  bool fixed(VarId x) const { return doms_[x].fixed(); }
  bool contains(VarId x, int v) const { return doms_[x].contains(v); }
  int value(VarId x) const { return doms_[x].min(); }

  // Mutators return false iff the domain became empty.
  bool set_min(VarId x, int v);
  bool set_max(VarId x, int v);
  bool assign(VarId x, int v);
  bool remove(VarId x, int v);
  // Keeps the members for which keep(v) holds.
  template <class Pred>
  bool filter(VarId x, Pred&& keep) {
    const Domain& d = doms_[x];
    std::vector<int> drop;
    d.for_each([&](int v) {
      if (!keep(v)) drop.push_back(v);
    });
    if (drop.empty()) return true;
    return remove_all(x, drop);
  }
  bool remove_all(VarId x, std::span<const int> values);

  void checkpoint();
  void restore();
  int depth() const { return static_cast<int>(marks_.size()); }

  // Trailed write of a propagator-owned cell. The cell must outlive the store's
  // use of it and must not move.
  void write(int& cell, int value) {
    if (cell == value) return;
    if (!marks_.empty()) cells_.push_back({&cell, cell});
    cell = value;
  }

  bool has_events() const { return !events_.empty(); }
  std::vector<PendingEvent> take_events();
  void clear_events();

 private:
  void save(VarId x);
  void notify(VarId x, int old_min, int old_max, int old_size);
  template <class Op>
  bool mutate(VarId x, Op&& op);

  struct DomainUndo {
    VarId var;
    Domain old;
  };
  struct CellUndo {
    int* cell;
    int old;
  };
  struct Mark {
    size_t doms;
    size_t cells;
    uint64_t segment;
  };

  std::vector<Domain> doms_;
  std::vector<uint64_t> saved_in_;
  std::vector<unsigned> pending_mask_;
  std::vector<PendingEvent> events_;
  std::vector<DomainUndo> dom_trail_;
  std::vector<CellUndo> cells_;
  std::vector<Mark> marks_;
  uint64_t segment_ = 0;
  uint64_t next_segment_ = 1;
};

}  // namespace msetord
