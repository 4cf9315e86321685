#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "msetord/ground.hpp"
#include "msetord/propagator.hpp"

namespace msetord {

enum class MsetOrder { Leq, Less };

// Stands for "no such value"; compares below every domain value.
inline constexpr int kNegInf = INT_MIN / 2;

// alpha: most significant value where the occurrence vectors of floor(X) and
// ceiling(Y) differ. beta: most significant value below alpha where X has more
// occurrences than Y. gamma: beta exists and X, Y agree strictly between alpha
// and beta. sigma: below beta, X is lex greater than Y (or, for the strict
// order, at least equal).
struct Pointers {
  int alpha = kNegInf;
  int beta = kNegInf;
  bool gamma = false;
  bool sigma = false;
  friend bool operator==(const Pointers&, const Pointers&) = default;
};

// Pointers plus the four occurrence counts the pruning rules consult.
struct Support {
  Pointers p;
  int ox_alpha = 0, oy_alpha = 0, ox_beta = 0, oy_beta = 0;
  friend bool operator==(const Support&, const Support&) = default;
};

// nullopt when ox >lex oy (or ox >=lex oy for the strict order).
std::optional<Pointers> set_flags_occ(const OccVector& ox, const OccVector& oy, MsetOrder order);

// Same result computed on the descending sorts of floor(X) and ceiling(Y),
// which must have equal length.
std::optional<Support> set_flags_sorted(std::span<const int> sx, std::span<const int> sy,
                                        MsetOrder order);

struct PlainWrite {
  void operator()(int& cell, int v) const { cell = v; }
};

// A bound moved from old_v to new_v: one occurrence leaves old_v, one enters new_v.
template <class W = PlainWrite>
void move_occurrence(OccVector& o, int old_v, int new_v, W&& write = {}) {
  if (old_v == new_v) return;
  write(o.at(old_v), o.at(old_v) - 1);
  write(o.at(new_v), o.at(new_v) + 1);
}

// Replaces one copy of old_v by new_v in a non-increasing vector, shifting the
// entries in between by one place.
template <class W = PlainWrite>
void move_sorted(std::vector<int>& s, int old_v, int new_v, W&& write = {}) {
  if (old_v == new_v) return;
  if (new_v > old_v) {
    // Leftmost copy of old_v moves left past entries smaller than new_v.
    size_t i = std::lower_bound(s.begin(), s.end(), old_v, std::greater<>()) - s.begin();
    size_t p = std::upper_bound(s.begin(), s.begin() + i, new_v, std::greater<>()) - s.begin();
    for (size_t k = i; k > p; --k) write(s[k], s[k - 1]);
    write(s[p], new_v);
  } else {
    size_t i = std::upper_bound(s.begin(), s.end(), old_v, std::greater<>()) - s.begin() - 1;
    size_t p = std::lower_bound(s.begin() + i + 1, s.end(), new_v, std::greater<>()) - s.begin() - 1;
    for (size_t k = i; k < p; ++k) write(s[k], s[k + 1]);
    write(s[p], new_v);
  }
}

struct MsetOptions {
  MsetOrder order = MsetOrder::Leq;
  bool entailment = false;
};

// Shared part of the two filtering variants: bound bookkeeping, the pruning
// loops over X and Y, and entailment handling.
class MsetPropagator : public Propagator {
 public:
  std::vector<Watch> watches() const override;
  bool wake(VarStore& store, int local, unsigned events) override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

  bool entailed() const { return entailed_ != 0; }
  const std::vector<VarId>& xs() const { return x_; }
  const std::vector<VarId>& ys() const { return y_; }
  const MsetOptions& options() const { return opt_; }

  // Pointers and counts for the current domains, nullopt if disentailed.
  virtual std::optional<Support> support() const = 0;
  virtual bool entailed_now() const = 0;

 protected:
  enum class Bound { XMin, XMax, YMin, YMax };

  MsetPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                 MsetOptions opt);
  virtual void moved(VarStore& store, Bound b, int old_v, int new_v) = 0;

  bool sync_x(VarStore& store, int i);
  bool sync_y(VarStore& store, int i);

  std::vector<VarId> x_, y_;
  MsetOptions opt_;

 private:
  PropStatus mark_entailed(VarStore& store);

  std::vector<int> min_x_, max_x_, min_y_, max_y_;
  int entailed_ = 0;
};

// Occurrence-vector variant; values are renamed onto 0..d-1 at construction.
// Vectors may differ in length.
class MsetOccPropagator final : public MsetPropagator {
 public:
  MsetOccPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                    MsetOptions opt = {});

  std::optional<Support> support() const override;
  bool entailed_now() const override;

  const ValueMap& value_map() const { return map_; }
  // Occurrence vectors over renamed values.
  const OccVector& ox() const { return ox_; }
  const OccVector& oy() const { return oy_; }
  const OccVector& ex() const { return ex_; }
  const OccVector& ey() const { return ey_; }

 protected:
  void moved(VarStore& store, Bound b, int old_v, int new_v) override;

 private:
  ValueMap map_;
  OccVector ox_, oy_, ex_, ey_;
};

// Sorted-vector variant; cost independent of the number of distinct values.
// Requires vectors of equal length.
class MsetSortedPropagator final : public MsetPropagator {
 public:
  MsetSortedPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                       MsetOptions opt = {});

  std::optional<Support> support() const override;
  bool entailed_now() const override;

  const std::vector<int>& sx() const { return sx_; }
  const std::vector<int>& sy() const { return sy_; }
  // Descending sorts of ceiling(X) and floor(Y), kept when entailment is on.
  const std::vector<int>& sex() const { return sex_; }
  const std::vector<int>& sey() const { return sey_; }

 protected:
  void moved(VarStore& store, Bound b, int old_v, int new_v) override;

 private:
  std::vector<int> sx_, sy_, sex_, sey_;
};

}  // namespace msetord
