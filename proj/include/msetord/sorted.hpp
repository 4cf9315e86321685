#pragma once

#include <vector>

#include "msetord/propagator.hpp"

namespace msetord {

// S is the non-increasing sort of X. Bounds consistency: every bound of X and S
// is checked for a permutation witness, treating domains as intervals.
// Matching-based, cubic per bound check; meant for short vectors.
class SortedPropagator final : public Propagator {
 public:
  SortedPropagator(std::vector<VarId> x, std::vector<VarId> s);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  std::vector<VarId> x_, s_;
};

}  // namespace msetord
