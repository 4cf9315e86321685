#pragma once

#include <vector>

#include "msetord/propagator.hpp"

namespace msetord {

// occurrences[j] counts the variables taking values[j]; values strictly
// decreasing. Values outside the list are forbidden.
struct GccSpec {
  std::vector<VarId> vars;
  std::vector<int> values;
  std::vector<VarId> occurrences;
};

// Counting-based filtering in both directions: occurrence bounds from what is
// fixed and what is possible (plus the total), and values removed or forced when
// an occurrence bound is met.
class GccPropagator final : public Propagator {
 public:
  explicit GccPropagator(GccSpec spec);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  GccSpec spec_;
};

}  // namespace msetord
