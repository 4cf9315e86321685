#include <doctest.h>

#include "msetord/basic.hpp"
#include "msetord/engine.hpp"

using namespace msetord;

namespace {

// x < y, counting how often it runs.
class CountingLess final : public Propagator {
 public:
  CountingLess(VarId x, VarId y, int* calls, bool idem) : x_(x), y_(y), calls_(calls), idem_(idem) {}
  std::vector<Watch> watches() const override { return {{x_, kBoundsChanged}, {y_, kBoundsChanged}}; }
  PropStatus propagate(VarStore& s) override {
    ++*calls_;
    if (!s.set_max(x_, s.max(y_) - 1) || !s.set_min(y_, s.min(x_) + 1)) return PropStatus::Failed;
    return PropStatus::Active;
  }
  bool satisfied(const VarStore& s) const override { return s.value(x_) < s.value(y_); }
  bool idempotent() const override { return idem_; }

 private:
  VarId x_, y_;
  int* calls_;
  bool idem_;
};

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("fixpoint over a chain") {
    Model m;
    auto xs = m.new_vars(4, 0, 3);
    int calls = 0;
    for (int i = 0; i + 1 < 4; ++i) m.emplace<CountingLess>(xs[i], xs[i + 1], &calls, true);
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    for (int i = 0; i < 4; ++i) CHECK(m.store().value(xs[i]) == i);
  }

  TEST_CASE("idempotent propagators are not rerun by their own events") {
    for (bool idem : {true, false}) {
      Model m;
      VarId x = m.new_var(0, 5), y = m.new_var(0, 5);
      int calls = 0;
      m.emplace<CountingLess>(x, y, &calls, idem);
      REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
      CHECK(calls == (idem ? 1 : 2));
    }
  }

  TEST_CASE("first solution and statistics") {
    Model m;
    auto xs = m.new_vars(3, 1, 3);
    m.emplace<AllDifferentPropagator>(xs);
    m.emplace<LinearPropagator>(std::vector<long>{1, -1}, std::vector<VarId>{xs[1], xs[0]},
                                Relation::Le, -1);  // x1 < x0
    Solver s(m);
    Branching b;
    b.order = xs;
    SearchResult r = s.solve_first(b);
    REQUIRE(r.status == SearchStatus::Solved);
    CHECK(r.solution[xs[0]] == 2);
    CHECK(r.solution[xs[1]] == 1);
    CHECK(r.solution[xs[2]] == 3);
    CHECK(r.stats.choice_points == 1);  // x0=2 fixes the rest; x0=1 is gone at the root
    CHECK(r.stats.fails == 0);
  }

  TEST_CASE("value order, per-variable overrides and preferred values") {
    Model m;
    VarId x = m.new_var(0, 4), y = m.new_var(0, 4);
    Solver s(m);
    Branching b;
    b.order = {x, y};
    b.values = ValueOrder::Descending;
    b.value_order[y] = ValueOrder::Ascending;
    b.preferred[x] = {2};
    SearchResult r = s.solve_first(b);
    CHECK(r.solution[x] == 2);
    CHECK(r.solution[y] == 0);
  }

  TEST_CASE("unsatisfiable at the root counts one fail") {
    Model m;
    auto xs = m.new_vars(2, 1, 1);
    m.emplace<AllDifferentPropagator>(xs);
    Solver s(m);
    SearchResult r = s.solve_first({});
    CHECK(r.status == SearchStatus::Unsat);
    CHECK(r.stats.fails == 1);
    CHECK(r.stats.choice_points == 0);
    CHECK(r.solution.empty());
  }

  TEST_CASE("pigeonhole failures are counted per refuted decision") {
    Model m;
    auto xs = m.new_vars(3, 1, 2);
    m.emplace<AllDifferentPropagator>(xs);
    Solver s(m);
    Branching b;
    b.order = xs;
    SearchResult r = s.solve_first(b);
    CHECK(r.status == SearchStatus::Unsat);
    // x0=1 -> x1=2 fixed, x2 wiped: fail; same for x0=2.
    CHECK(r.stats.choice_points == 2);
    CHECK(r.stats.fails == 2);
  }

  TEST_CASE("branch and bound finds the optimum") {
    Model m;
    auto xs = m.new_vars(3, 0, 5);
    VarId cost = m.new_var(0, 15);
    m.emplace<LinearPropagator>(std::vector<long>{-1, -1, -1}, xs, Relation::Le, -7);  // sum >= 7
    m.emplace<LinearPropagator>(std::vector<long>{2, 1, 3, -1},
                                std::vector<VarId>{xs[0], xs[1], xs[2], cost}, Relation::Eq, 0);
    m.minimize(cost);
    Solver s(m);
    Branching b;
    b.order = xs;
    b.values = ValueOrder::Descending;
    SearchResult r = s.solve_optimal(b);
    REQUIRE(r.status == SearchStatus::Solved);
    CHECK(r.stats.best_objective == 9);  // 5 on x1, 2 on x0
    CHECK(r.solution[cost] == 9);
    CHECK(r.stats.solutions >= 1);
  }

  TEST_CASE("timeout") {
    Model m;
    auto xs = m.new_vars(11, 1, 10);
    m.emplace<AllDifferentPropagator>(xs);
    Solver s(m);
    Branching b;
    b.order = xs;
    SearchResult r = s.solve_first(b, Limits{0.05});
    CHECK(r.status == SearchStatus::Timeout);
    CHECK(r.stats.wall_time < 1.0);
  }

  TEST_CASE("the store is back at the root after search") {
    Model m;
    auto xs = m.new_vars(3, 1, 3);
    m.emplace<AllDifferentPropagator>(xs);
    Solver s(m);
    Branching b;
    b.order = xs;
    s.solve_first(b);
    CHECK(m.store().depth() == 0);
    for (VarId x : xs) CHECK(m.store().size(x) == 3);
  }
}
