#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "msetord/basic.hpp"

namespace msetord::bench {

BuiltModel build_progressive_party(const PartyInstance& inst, const RunConfig& cfg) {
  const Symmetry sym = symmetry_or_throw(cfg);
  if (sym.rows == Ordering::MsetLess || sym.cols == Ordering::MsetLess)
    throw SchemaError("progressive party takes non-strict multiset orderings");

  // Hosts by decreasing spare capacity so that ascending values try roomy hosts
  // first; guests by decreasing crew so that equal crews are adjacent.
  std::vector<PartyHost> hosts = inst.hosts;
  std::stable_sort(hosts.begin(), hosts.end(),
                   [](const PartyHost& a, const PartyHost& b) { return a.spare() > b.spare(); });
  std::vector<PartyGuest> guests = inst.guests;
  std::stable_sort(guests.begin(), guests.end(),
                   [](const PartyGuest& a, const PartyGuest& b) { return a.crew > b.crew; });

  const int P = inst.periods;
  const int G = static_cast<int>(guests.size());
  const int K = static_cast<int>(hosts.size());
  BuiltModel b;
  Model& m = *b.model;

  std::vector<std::vector<VarId>> H(G);
  for (int g = 0; g < G; ++g) H[g] = m.new_vars(P, 0, K - 1);
  std::vector<VarId> host_const;
  for (int k = 0; k < K; ++k) host_const.push_back(m.new_const(k));

  for (int g = 0; g < G; ++g) m.emplace<AllDifferentPropagator>(H[g]);

  for (int g1 = 0; g1 < G; ++g1) {
    for (int g2 = g1 + 1; g2 < G; ++g2) {
      std::vector<VarId> meet;
      for (int p = 0; p < P; ++p) {
        VarId same = m.new_var(0, 1);
        m.emplace<ReifiedEqPropagator>(H[g1][p], H[g2][p], same);
        meet.push_back(same);
      }
      m.emplace<LinearPropagator>(std::vector<long>(P, 1), meet, Relation::Le, 1);
    }
  }

  for (int p = 0; p < P; ++p) {
    std::vector<std::vector<VarId>> visits(K);
    for (int g = 0; g < G; ++g) {
      std::vector<VarId> row;
      for (int k = 0; k < K; ++k) {
        VarId c = m.new_var(0, 1);
        m.emplace<ReifiedEqPropagator>(H[g][p], host_const[k], c);
        row.push_back(c);
        visits[k].push_back(c);
      }
      m.emplace<LinearPropagator>(std::vector<long>(K, 1), row, Relation::Eq, 1);
    }
    std::vector<long> crews;
    for (const auto& g : guests) crews.push_back(g.crew);
    for (int k = 0; k < K; ++k)
      m.emplace<LinearPropagator>(crews, visits[k], Relation::Le, hosts[k].spare());
  }

  std::vector<std::pair<size_t, size_t>> row_pairs;
  for (int g = 0; g + 1 < G; ++g)
    if (guests[g].crew == guests[g + 1].crew) row_pairs.push_back({g, g + 1});
  post_orderings(m, H, row_pairs, sym.rows, cfg);

  std::vector<std::vector<VarId>> cols(P);
  for (int p = 0; p < P; ++p)
    for (int g = 0; g < G; ++g) cols[p].push_back(H[g][p]);
  std::vector<std::pair<size_t, size_t>> col_pairs;
  for (int p = 0; p + 1 < P; ++p) col_pairs.push_back({p, p + 1});
  post_orderings(m, cols, col_pairs, sym.cols, cfg);

  const Labelling lab = cfg.labelling.value_or(Labelling::RowWise);
  if (lab == Labelling::RowWise) {
    for (int g = 0; g < G; ++g)
      for (int p = 0; p < P; ++p) b.branching.order.push_back(H[g][p]);
  } else {
    for (int p = 0; p < P; ++p)
      for (int g = 0; g < G; ++g) b.branching.order.push_back(H[g][p]);
  }
  return b;
}

}  // namespace msetord::bench
