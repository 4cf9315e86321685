#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "msetord/encodings.hpp"
#include "msetord/engine.hpp"
#include "msetord/mset.hpp"
#include "msetord/oracle.hpp"

namespace testing {

using namespace msetord;

// Multiset order straight from the recursive definition, independent of the
// library: compare maxima, drop one shared maximum and recurse.
inline bool ref_mset_leq(std::vector<int> a, std::vector<int> b, bool strict) {
  while (true) {
    if (a.empty()) return !(strict && b.empty());
    if (b.empty()) return false;
    auto ma = std::max_element(a.begin(), a.end());
    auto mb = std::max_element(b.begin(), b.end());
    if (*ma != *mb) return *ma < *mb;
    a.erase(ma);
    b.erase(mb);
  }
}

inline bool sort_desc_equal(std::span<const int> x, std::span<const int> s) {
  std::vector<int> a(x.begin(), x.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  return std::equal(a.begin(), a.end(), s.begin(), s.end());
}

inline PairChecker mset_checker(bool strict) {
  return [strict](std::span<const int> x, std::span<const int> y) {
    return ref_mset_leq({x.begin(), x.end()}, {y.begin(), y.end()}, strict);
  };
}

inline std::vector<VarId> make_vars(Model& m, const Domains& doms) {
  std::vector<VarId> out;
  for (const auto& d : doms) out.push_back(m.new_var(d));
  return out;
}

inline Domains domains_of(const VarStore& s, std::span<const VarId> vars) {
  Domains out;
  for (VarId v : vars) out.push_back(s.dom(v).values());
  return out;
}

inline Domains concat(const Domains& a, const Domains& b) {
  Domains out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct MsetRun {
  std::optional<Domains> doms;  // X then Y; nullopt on failure
  bool entailed = false;
};

// Runs one multiset ordering to fixpoint. The direct encodings are posted as a
// bare propagator so that the entailment flag can be read back.
inline MsetRun run_mset(const Domains& x, const Domains& y, MsetOrder ord, Encoding enc,
                        bool entailment = false) {
  Model m;
  auto xs = make_vars(m, x);
  auto ys = make_vars(m, y);
  const MsetPropagator* direct = nullptr;
  if (enc == Encoding::Algorithm)
    direct = &m.emplace<MsetOccPropagator>(m.store(), xs, ys, MsetOptions{ord, entailment});
  else if (enc == Encoding::AlgorithmSorted)
    direct = &m.emplace<MsetSortedPropagator>(m.store(), xs, ys, MsetOptions{ord, entailment});
  else
    post_mset(m, xs, ys, ord, enc);
  MsetRun r;
  if (propagate_fixpoint(m) == Fixpoint::Failed) return r;
  r.doms = concat(domains_of(m.store(), xs), domains_of(m.store(), ys));
  r.entailed = direct && direct->entailed();
  return r;
}

}  // namespace testing
