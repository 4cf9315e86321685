#pragma once

#include <vector>

#include "msetord/propagator.hpp"

namespace msetord {

// GAC on X <=lex Y (or X <lex Y). Both orderings are monotone, so support only
// depends on floor(X) and ceiling(Y) and a single pass reaches the fixpoint.
class LexPropagator final : public Propagator {
 public:
  LexPropagator(std::vector<VarId> x, std::vector<VarId> y, bool strict);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  std::vector<VarId> x_, y_;
  bool strict_;
};

}  // namespace msetord
