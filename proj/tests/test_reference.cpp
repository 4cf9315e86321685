#include <doctest.h>

#include <random>

#include "msetord/arith.hpp"
#include "msetord/basic.hpp"
#include "msetord/gcc.hpp"
#include "msetord/lex.hpp"
#include "msetord/sorted.hpp"
#include "support.hpp"

using namespace msetord;
using testing::domains_of;
using testing::make_vars;

namespace {

bool ref_lex(std::span<const int> x, std::span<const int> y, bool strict) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return !strict;
}

}  // namespace

TEST_SUITE("reference") {
  TEST_CASE("lex propagator is GAC on random instances") {
    int mismatches = 0;
    for (uint64_t seed = 0; seed < 2000; ++seed) {
      InstanceSpec in = random_instance(seed);
      for (bool strict : {false, true}) {
        Model m;
        auto xs = make_vars(m, in.x);
        auto ys = make_vars(m, in.y);
        m.emplace<LexPropagator>(xs, ys, strict);
        std::optional<Domains> got;
        if (propagate_fixpoint(m) == Fixpoint::Stable)
          got = testing::concat(domains_of(m.store(), xs), domains_of(m.store(), ys));
        auto want = brute_force_gac(
            [strict](std::span<const int> x, std::span<const int> y) { return ref_lex(x, y, strict); },
            in.x, in.y);
        if (got != want) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("gcc counts on the decomposition example") {
    // X = <{0,3},{2}> over values 3,2,1,0
    Model m;
    auto xs = make_vars(m, {{0, 3}, {2}});
    auto ox = m.new_vars(4, 0, 2);
    m.emplace<GccPropagator>(GccSpec{xs, {3, 2, 1, 0}, ox});
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(domains_of(m.store(), ox) == Domains{{0, 1}, {1}, {0}, {0, 1}});
  }

  TEST_CASE("gcc forces and forbids values from occurrence bounds") {
    Model m;
    auto xs = m.new_vars(3, 1, 3);
    auto occ = std::vector<VarId>{m.new_const(2), m.new_const(0), m.new_var(0, 3)};
    m.emplace<GccPropagator>(GccSpec{xs, {3, 2, 1}, occ});
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(m.store().dom(occ[2]).values() == std::vector<int>{1});
    for (VarId x : xs) CHECK_FALSE(m.store().contains(x, 2));

    Model bad;
    auto ys = bad.new_vars(2, 1, 2);
    bad.emplace<GccPropagator>(
        GccSpec{ys, {2, 1}, {bad.new_const(2), bad.new_const(1)}});
    CHECK(propagate_fixpoint(bad) == Fixpoint::Failed);
  }

  TEST_CASE("sorted channel on the decomposition example") {
    Model m;
    auto xs = make_vars(m, {{0, 3}, {2}});
    auto sx = make_vars(m, {{0, 2, 3}, {0, 2, 3}});
    auto ys = make_vars(m, {{2, 3}, {1}});
    auto sy = make_vars(m, {{1, 2, 3}, {1, 2, 3}});
    m.emplace<SortedPropagator>(xs, sx);
    m.emplace<SortedPropagator>(ys, sy);
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(domains_of(m.store(), sx) == Domains{{2, 3}, {0, 2}});
    CHECK(domains_of(m.store(), sy) == Domains{{2, 3}, {1}});
  }

  TEST_CASE("sorted channel is bounds consistent on random instances") {
    std::mt19937_64 rng(7);
    int mismatches = 0;
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 3);
      Domains x;
      for (int i = 0; i < n; ++i) {
        int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
        if (a > b) std::swap(a, b);
        std::vector<int> d;
        for (int v = a; v <= b; ++v) d.push_back(v);
        x.push_back(d);
      }
      Domains s(n, std::vector<int>{0, 1, 2, 3});
      Model m;
      auto xs = make_vars(m, x);
      auto ss = make_vars(m, s);
      m.emplace<SortedPropagator>(xs, ss);
      std::optional<Domains> got;
      if (propagate_fixpoint(m) == Fixpoint::Stable)
        got = testing::concat(domains_of(m.store(), xs), domains_of(m.store(), ss));
      auto want = brute_force_gac(
          [](std::span<const int> a, std::span<const int> b) {
            return testing::sort_desc_equal(a, b);
          },
          x, s);
      // Interval domains: the bounds of a GAC fixpoint are what BC must reach.
      auto bounds = [](const std::optional<Domains>& d) {
        std::vector<std::pair<int, int>> out;
        if (d)
          for (const auto& v : *d) out.push_back({v.front(), v.back()});
        return out;
      };
      if (got.has_value() != want.has_value() || bounds(got) != bounds(want)) ++mismatches;
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("arithmetic encoding base and weights") {
    CHECK(ArithMsetPropagator::default_base(3, 3) == 3);
    CHECK(ArithMsetPropagator::default_base(2, 1) == 3);
    CHECK(ArithMsetPropagator::default_base(1, 1) == 2);
    // base 2 would rank {{0,0}} (weight 2) above {{1}} (weight 2): a tie
    auto r = testing::run_mset({{0}, {0}}, {{0, 1}}, MsetOrder::Less, Encoding::Arith);
    REQUIRE(r.doms);
    CHECK(*r.doms == Domains{{0}, {0}, {1}});
  }

  TEST_CASE("arithmetic encoding with wide value ranges stays exact") {
    Domains x(6, std::vector<int>{0, 1000, 2000, 3000, 4000});
    Domains y(6, std::vector<int>{0, 4000});
    x[0] = {4000};
    y[0] = {4000};
    auto a = testing::run_mset(x, y, MsetOrder::Leq, Encoding::Arith);
    auto b = testing::run_mset(x, y, MsetOrder::Leq, Encoding::Algorithm);
    CHECK(a.doms == b.doms);
  }

  TEST_CASE("all-different removes fixed values") {
    Model m;
    auto xs = make_vars(m, {{1}, {1, 2}, {1, 2, 3}});
    m.emplace<AllDifferentPropagator>(xs);
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(domains_of(m.store(), xs) == Domains{{1}, {2}, {3}});
    Model bad;
    auto ys = make_vars(bad, {{1}, {1, 2}, {2}});
    bad.emplace<AllDifferentPropagator>(ys);
    CHECK(propagate_fixpoint(bad) == Fixpoint::Failed);
  }

  TEST_CASE("table keeps supported values only") {
    Model m;
    auto xs = make_vars(m, {{1, 2, 3}, {1, 2, 3}});
    m.emplace<TablePropagator>(xs, std::vector<std::vector<int>>{{1, 2}, {3, 1}, {4, 4}});
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(domains_of(m.store(), xs) == Domains{{1, 3}, {1, 2}});
  }

  TEST_CASE("linear bounds reasoning") {
    Model m;
    auto xs = m.new_vars(2, 0, 10);
    m.emplace<LinearPropagator>(std::vector<long>{2, 3}, xs, Relation::Le, 12);
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(m.store().max(xs[0]) == 6);
    CHECK(m.store().max(xs[1]) == 4);

    Model e;
    auto ys = e.new_vars(3, 0, 5);
    e.emplace<LinearPropagator>(std::vector<long>{1, 1, -1}, ys, Relation::Eq, 9);
    REQUIRE(propagate_fixpoint(e) == Fixpoint::Stable);
    CHECK(e.store().min(ys[0]) == 4);
    CHECK(e.store().max(ys[2]) == 1);
  }

  TEST_CASE("reified equality in all directions") {
    Model m;
    VarId x = m.new_var(1, 3), y = m.new_var(4, 5), b = m.new_var(0, 1);
    m.emplace<ReifiedEqPropagator>(x, y, b);
    REQUIRE(propagate_fixpoint(m) == Fixpoint::Stable);
    CHECK(m.store().value(b) == 0);

    Model n;
    VarId p = n.new_var(1, 3), q = n.new_var(3, 5), c = n.new_const(1);
    n.emplace<ReifiedEqPropagator>(p, q, c);
    REQUIRE(propagate_fixpoint(n) == Fixpoint::Stable);
    CHECK(n.store().value(p) == 3);
    CHECK(n.store().value(q) == 3);
  }

  TEST_CASE("conditional ordering runs only once the guards are equal") {
    Model m;
    VarId r1 = m.new_var(0, 1), r2 = m.new_var(0, 1);
    auto xs = make_vars(m, {{0, 3}, {2}});
    auto ys = make_vars(m, {{2, 3}, {1}});
    m.emplace<ConditionalPropagator>(
        r1, r2, std::make_unique<MsetOccPropagator>(m.store(), xs, ys));
    Solver s(m);
    REQUIRE(s.propagate() == Fixpoint::Stable);
    CHECK(m.store().contains(xs[0], 3));
    m.store().checkpoint();
    m.store().assign(r1, 1);
    m.store().assign(r2, 1);
    REQUIRE(s.propagate() == Fixpoint::Stable);
    CHECK_FALSE(m.store().contains(xs[0], 3));
    m.store().restore();
    m.store().checkpoint();
    m.store().assign(r1, 0);
    m.store().assign(r2, 1);
    REQUIRE(s.propagate() == Fixpoint::Stable);
    CHECK_FALSE(s.is_active(0));
    m.store().restore();
    CHECK(s.is_active(0));
  }
}
