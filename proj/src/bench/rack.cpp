#include <algorithm>

#include "common.hpp"
#include "msetord/basic.hpp"
#include "msetord/lex.hpp"

namespace msetord::bench {

BuiltModel build_rack(const RackInstance& inst, const RunConfig& cfg) {
  const Symmetry sym = symmetry_or_throw(cfg);
  if (sym.cols != Ordering::None)
    throw SchemaError("rack orders racks (rows) only");
  if (sym.rows != Ordering::None && sym.rows != Ordering::MsetLeq && sym.rows != Ordering::LexLeq)
    throw SchemaError("rack supports none, msetR and lexR");

  std::vector<RackModel> models{{0, 0, 0}};  // unused rack
  models.insert(models.end(), inst.models.begin(), inst.models.end());
  const int M = static_cast<int>(models.size());
  const int R = inst.racks;
  const int T = static_cast<int>(inst.cards.size());
  int max_conn = 0, max_power = 0, max_price = 0;
  for (const auto& rm : models) {
    max_conn = std::max(max_conn, rm.connectors);
    max_power = std::max(max_power, rm.power);
    max_price = std::max(max_price, rm.price);
  }

  BuiltModel b;
  b.optimise = true;
  Model& m = *b.model;
  std::vector<VarId> model_of = m.new_vars(R, 0, M - 1);
  std::vector<VarId> power(R), conn(R), price(R);
  std::vector<std::vector<int>> power_t, conn_t, price_t;
  for (int k = 0; k < M; ++k) {
    power_t.push_back({k, models[k].power});
    conn_t.push_back({k, models[k].connectors});
    price_t.push_back({k, models[k].price});
  }
  // counts[j][i]: cards of type i in rack j
  std::vector<std::vector<VarId>> counts(R);
  for (int j = 0; j < R; ++j) {
    power[j] = m.new_var(0, max_power);
    conn[j] = m.new_var(0, max_conn);
    price[j] = m.new_var(0, max_price);
    m.emplace<TablePropagator>(std::vector<VarId>{model_of[j], power[j]}, power_t);
    m.emplace<TablePropagator>(std::vector<VarId>{model_of[j], conn[j]}, conn_t);
    m.emplace<TablePropagator>(std::vector<VarId>{model_of[j], price[j]}, price_t);
    for (int i = 0; i < T; ++i)
      counts[j].push_back(m.new_var(0, std::min(max_conn, inst.cards[i].demand)));

    std::vector<long> ones(T, 1);
    std::vector<VarId> vars = counts[j];
    ones.push_back(-1);
    vars.push_back(conn[j]);
    m.emplace<LinearPropagator>(ones, vars, Relation::Le, 0);

    std::vector<long> watts;
    for (const auto& c : inst.cards) watts.push_back(c.power);
    watts.push_back(-1);
    vars.back() = power[j];
    m.emplace<LinearPropagator>(watts, vars, Relation::Le, 0);
  }
  for (int i = 0; i < T; ++i) {
    std::vector<VarId> col;
    for (int j = 0; j < R; ++j) col.push_back(counts[j][i]);
    m.emplace<LinearPropagator>(std::vector<long>(R, 1), col, Relation::Eq, inst.cards[i].demand);
  }
  VarId cost = m.new_var(0, max_price * R);
  {
    std::vector<long> coeffs(R, 1);
    std::vector<VarId> vars = price;
    coeffs.push_back(-1);
    vars.push_back(cost);
    m.emplace<LinearPropagator>(coeffs, vars, Relation::Eq, 0);
  }
  m.minimize(cost);

  if (sym.rows == Ordering::MsetLeq) {
    MsetFamily fam(m, counts, cfg.encoding, cfg.entailment);
    for (int i = 0; i < R; ++i)
      for (int j = i + 1; j < R; ++j) fam.order_if_equal(model_of[i], model_of[j], i, j, MsetOrder::Leq);
  } else if (sym.rows == Ordering::LexLeq) {
    for (int i = 0; i < R; ++i)
      for (int j = i + 1; j < R; ++j)
        m.emplace<ConditionalPropagator>(model_of[i], model_of[j],
                                         std::make_unique<LexPropagator>(counts[i], counts[j], false));
  }

  // Rack by rack: its model, then how many cards of each type go in, most first.
  for (int j = 0; j < R; ++j) {
    b.branching.order.push_back(model_of[j]);
    for (VarId c : counts[j]) {
      b.branching.order.push_back(c);
      b.branching.value_order[c] = ValueOrder::Descending;
    }
  }
  return b;
}

}  // namespace msetord::bench
