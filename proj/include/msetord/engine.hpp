#pragma once

#include <chrono>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "msetord/domain.hpp"
#include "msetord/propagator.hpp"

namespace msetord {

class Model {
 public:
  VarStore& store() { return store_; }
  const VarStore& store() const { return store_; }

  VarId new_var(int lo, int hi) { return store_.new_var(lo, hi); }
  VarId new_var(std::span<const int> values) { return store_.new_var(values); }
  VarId new_const(int v) { return store_.new_const(v); }
  std::vector<VarId> new_vars(int count, int lo, int hi);

  Propagator& post(std::unique_ptr<Propagator> p);
  template <class P, class... Args>
  P& emplace(Args&&... args) {
    return static_cast<P&>(post(std::make_unique<P>(std::forward<Args>(args)...)));
  }

  void minimize(VarId objective) { objective_ = objective; }
  std::optional<VarId> objective() const { return objective_; }

  int num_propagators() const { return static_cast<int>(props_.size()); }
  Propagator& propagator(int i) { return *props_[i]; }
  const Propagator& propagator(int i) const { return *props_[i]; }

  struct Subscription {
    int prop;
    int local;
    unsigned events;
  };
  const std::vector<Subscription>& subscriptions(VarId x) const;

 private:
  VarStore store_;
  std::vector<std::unique_ptr<Propagator>> props_;
  mutable std::vector<std::vector<Subscription>> subs_;
  std::optional<VarId> objective_;
};

enum class Fixpoint { Stable, Failed };

struct SearchStats {
  long fails = 0;
  long choice_points = 0;
  double wall_time = 0.0;
  long solutions = 0;
  std::optional<long> best_objective;
};

enum class SearchStatus { Solved, Unsat, Timeout };

struct SearchResult {
  SearchStatus status = SearchStatus::Unsat;
  std::vector<int> solution;  // indexed by variable id; empty when none found
  SearchStats stats;
};

enum class ValueOrder { Ascending, Descending };

// Static variable order. Variables left unfixed after the order is exhausted
// are labelled in id order.
struct Branching {
  std::vector<VarId> order;
  ValueOrder values = ValueOrder::Ascending;
  std::map<VarId, ValueOrder> value_order;      // per-variable override
  std::map<VarId, std::vector<int>> preferred;  // tried first, in this order
};

struct Limits {
  double timeout_s = 0.0;  // 0: none
};

class Solver {
 public:
  explicit Solver(Model& model);

  // Runs every scheduled propagator until nothing changes. The first call
  // schedules all propagators.
  Fixpoint propagate();

  SearchResult solve_first(const Branching& branching, const Limits& limits = {});
  // Minimises the model objective by branch and bound.
  SearchResult solve_optimal(const Branching& branching, const Limits& limits = {});

  bool is_active(int prop) const { return active_[prop] != 0; }

 private:
  void schedule(int prop);
  void dispatch(int current);
  SearchResult search(const Branching& branching, const Limits& limits, bool optimise);
  bool dfs(size_t pos);
  std::vector<int> value_sequence(VarId x) const;
  void record_solution();
  bool out_of_time();

  Model& model_;
  VarStore& store_;
  std::vector<int> active_;
  std::vector<char> queued_;
  std::deque<int> queue_;
  bool root_scheduled_ = false;

  const Branching* branching_ = nullptr;
  bool optimise_ = false;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_ = false;
  SearchStats stats_;
  std::vector<int> best_;
};

Fixpoint propagate_fixpoint(Model& model);

}  // namespace msetord
