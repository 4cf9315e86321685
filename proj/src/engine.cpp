#include "msetord/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace msetord {

std::vector<VarId> Model::new_vars(int count, int lo, int hi) {
  std::vector<VarId> out;
  for (int i = 0; i < count; ++i) out.push_back(new_var(lo, hi));
  return out;
}

Propagator& Model::post(std::unique_ptr<Propagator> p) {
  const int id = num_propagators();
  std::vector<Watch> ws = p->watches();
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    assert(ws[i].var >= 0 && ws[i].var < store_.num_vars());
    if (static_cast<int>(subs_.size()) <= ws[i].var) subs_.resize(store_.num_vars());
    subs_[ws[i].var].push_back({id, i, ws[i].events});
  }
  props_.push_back(std::move(p));
  return *props_.back();
}

const std::vector<Model::Subscription>& Model::subscriptions(VarId x) const {
  if (static_cast<int>(subs_.size()) <= x) subs_.resize(store_.num_vars());
  return subs_[x];
}

Solver::Solver(Model& model)
    : model_(model),
      store_(model.store()),
      active_(model.num_propagators(), 1),
      queued_(model.num_propagators(), 0) {}

void Solver::schedule(int prop) {
  if (queued_[prop]) return;
  queued_[prop] = 1;
  queue_.push_back(prop);
}

void Solver::dispatch(int current) {
  for (const PendingEvent& e : store_.take_events()) {
    for (const Model::Subscription& s : model_.subscriptions(e.var)) {
      if (!(s.events & e.mask) || !active_[s.prop]) continue;
      Propagator& p = model_.propagator(s.prop);
      bool wanted = p.wake(store_, s.local, e.mask);
      if (wanted && !(s.prop == current && p.idempotent())) schedule(s.prop);
    }
  }
}

Fixpoint Solver::propagate() {
  assert(static_cast<int>(active_.size()) == model_.num_propagators());
  if (!root_scheduled_) {
    root_scheduled_ = true;
    dispatch(-1);
    for (int i = 0; i < model_.num_propagators(); ++i) schedule(i);
  }
  dispatch(-1);
  while (!queue_.empty()) {
    int id = queue_.front();
    queue_.pop_front();
    queued_[id] = 0;
    if (!active_[id]) continue;
    PropStatus st = model_.propagator(id).propagate(store_);
    if (st == PropStatus::Failed) {
      for (int q : queue_) queued_[q] = 0;
      queue_.clear();
      store_.clear_events();
      return Fixpoint::Failed;
    }
    if (st == PropStatus::Entailed) store_.write(active_[id], 0);
    dispatch(id);
  }
  return Fixpoint::Stable;
}

bool Solver::out_of_time() {
  if (timed_out_) return true;
  if (has_deadline_ && (stats_.choice_points & 255) == 0 &&
      std::chrono::steady_clock::now() > deadline_)
    timed_out_ = true;
  return timed_out_;
}

std::vector<int> Solver::value_sequence(VarId x) const {
  const Domain& d = store_.dom(x);
  std::vector<int> vals = d.values();
  ValueOrder order = branching_->values;
  if (auto it = branching_->value_order.find(x); it != branching_->value_order.end())
    order = it->second;
  if (order == ValueOrder::Descending) std::reverse(vals.begin(), vals.end());
  if (auto it = branching_->preferred.find(x); it != branching_->preferred.end()) {
    std::vector<int> out;
    for (int v : it->second)
      if (d.contains(v)) out.push_back(v);
    for (int v : vals)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }
  return vals;
}

void Solver::record_solution() {
  for (VarId x = 0; x < store_.num_vars(); ++x) {
    if (!store_.fixed(x)) throw std::logic_error("solution with an unfixed variable");
  }
  for (int i = 0; i < model_.num_propagators(); ++i) {
    if (!model_.propagator(i).satisfied(store_))
      throw std::logic_error("solution violates constraint " + std::to_string(i));
  }
  best_.resize(store_.num_vars());
  for (VarId x = 0; x < store_.num_vars(); ++x) best_[x] = store_.value(x);
  ++stats_.solutions;
  if (auto obj = model_.objective()) stats_.best_objective = store_.value(*obj);
}

// Returns true to stop the search.
bool Solver::dfs(size_t pos) {
  if (out_of_time()) return true;
  const auto& order = branching_->order;
  while (pos < order.size() && store_.fixed(order[pos])) ++pos;
  VarId x = -1;
  if (pos < order.size()) {
    x = order[pos];
  } else {
    for (VarId v = 0; v < store_.num_vars() && x < 0; ++v)
      if (!store_.fixed(v)) x = v;
  }
  if (x < 0) {
    record_solution();
    return !optimise_;
  }

  for (int v : value_sequence(x)) {
    store_.checkpoint();
    ++stats_.choice_points;
    bool ok = store_.assign(x, v);
    if (ok && optimise_ && stats_.best_objective)
      ok = store_.set_max(*model_.objective(), static_cast<int>(*stats_.best_objective - 1));
    if (ok) ok = propagate() == Fixpoint::Stable;
    if (!ok) {
      ++stats_.fails;
    } else if (dfs(pos)) {
      store_.restore();
      return true;
    }
    store_.restore();
    if (out_of_time()) return true;
  }
  return false;
}

SearchResult Solver::search(const Branching& branching, const Limits& limits, bool optimise) {
  auto start = std::chrono::steady_clock::now();
  branching_ = &branching;
  optimise_ = optimise;
  timed_out_ = false;
  has_deadline_ = limits.timeout_s > 0;
  if (has_deadline_)
    deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(limits.timeout_s));
  stats_ = {};
  best_.clear();
  if (optimise) assert(model_.objective());

  SearchResult r;
  if (propagate() == Fixpoint::Failed) {
    stats_.fails = 1;
  } else {
    store_.checkpoint();
    dfs(0);
    store_.restore();
  }
  stats_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.stats = stats_;
  r.solution = best_;
  if (timed_out_)
    r.status = SearchStatus::Timeout;
  else
    r.status = best_.empty() ? SearchStatus::Unsat : SearchStatus::Solved;
  return r;
}

SearchResult Solver::solve_first(const Branching& branching, const Limits& limits) {
  return search(branching, limits, false);
}

SearchResult Solver::solve_optimal(const Branching& branching, const Limits& limits) {
  return search(branching, limits, true);
}

Fixpoint propagate_fixpoint(Model& model) {
  Solver s(model);
  return s.propagate();
}

}  // namespace msetord
