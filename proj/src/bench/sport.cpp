#include "common.hpp"
#include "msetord/basic.hpp"
#include "msetord/gcc.hpp"

namespace msetord::bench {

// Odd n: n weeks of (n-1)/2 games, one team resting each week, every team
// playing exactly twice in each period. Even n: n/2 periods over n-1 weeks plus
// a dummy week so that every team also plays exactly twice per period.
BuiltModel build_sport(const SportInstance& inst, const RunConfig& cfg) {
  const Symmetry sym = symmetry_or_throw(cfg);
  const int n = inst.teams;
  if (n < 3) throw SchemaError("sport needs at least 3 teams");
  const bool odd = n % 2 == 1;
  const int P = odd ? (n - 1) / 2 : n / 2;
  const int W = n;                      // week columns, dummy included when even
  const int real_weeks = odd ? n : n - 1;
  if (!odd && sym.cols == Ordering::MsetLess)
    throw SchemaError("every week column holds all teams when n is even; <m is unsatisfiable");

  BuiltModel b;
  Model& m = *b.model;
  // T[p][w] = {home, away}
  std::vector<std::vector<std::vector<VarId>>> T(P, std::vector<std::vector<VarId>>(W));
  for (int p = 0; p < P; ++p)
    for (int w = 0; w < W; ++w) T[p][w] = m.new_vars(2, 1, n);

  std::vector<std::vector<VarId>> cols(W), rows(P);
  for (int w = 0; w < W; ++w)
    for (int p = 0; p < P; ++p) cols[w].insert(cols[w].end(), T[p][w].begin(), T[p][w].end());
  for (int p = 0; p < P; ++p)
    for (int w = 0; w < W; ++w) rows[p].insert(rows[p].end(), T[p][w].begin(), T[p][w].end());

  for (int w = 0; w < W; ++w) m.emplace<AllDifferentPropagator>(cols[w]);

  std::vector<int> teams_desc;
  for (int t = n; t >= 1; --t) teams_desc.push_back(t);
  std::vector<VarId> twice;
  for (int t = 0; t < n; ++t) twice.push_back(m.new_const(2));
  for (int p = 0; p < P; ++p) m.emplace<GccPropagator>(GccSpec{rows[p], teams_desc, twice});

  std::vector<std::vector<int>> games;
  for (int h = 1; h <= n; ++h)
    for (int a = h + 1; a <= n; ++a) games.push_back({h, a, (h - 1) * n + a});
  std::vector<VarId> G;
  for (int p = 0; p < P; ++p) {
    for (int w = 0; w < real_weeks; ++w) {
      VarId g = m.new_var(1, n * n);
      m.emplace<TablePropagator>(std::vector<VarId>{T[p][w][0], T[p][w][1], g}, games);
      G.push_back(g);
    }
  }
  m.emplace<AllDifferentPropagator>(G);
  for (int p = 0; p < P; ++p)
    for (int w = 0; w < W; ++w)
      m.emplace<LinearPropagator>(std::vector<long>{1, -1}, T[p][w], Relation::Le, -1);

  std::vector<std::pair<size_t, size_t>> col_pairs, row_pairs;
  for (int w = 0; w + 1 < W; ++w) col_pairs.push_back({w, w + 1});
  for (int p = 0; p + 1 < P; ++p) row_pairs.push_back({p, p + 1});
  post_orderings(m, cols, col_pairs, sym.cols, cfg);
  post_orderings(m, rows, row_pairs, sym.rows, cfg);

  // Week by week; the slot taken first alternates between weeks.
  const Labelling lab = cfg.labelling.value_or(Labelling::ColumnWise);
  auto slots = [&](int p, int w) {
    int first = w % 2;
    b.branching.order.push_back(T[p][w][first]);
    b.branching.order.push_back(T[p][w][1 - first]);
  };
  if (lab == Labelling::ColumnWise) {
    for (int w = 0; w < W; ++w)
      for (int p = 0; p < P; ++p) slots(p, w);
  } else {
    for (int p = 0; p < P; ++p)
      for (int w = 0; w < W; ++w) slots(p, w);
  }
  return b;
}

}  // namespace msetord::bench
