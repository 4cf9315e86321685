#pragma once

#include <vector>

#include "msetord/domain.hpp"

namespace msetord {

enum class PropStatus { Active, Entailed, Failed };

struct Watch {
  VarId var;
  unsigned events;
};

class Propagator {
 public:
  virtual ~Propagator() = default;

  // The position of a watch in this list is the local index handed to wake().
  virtual std::vector<Watch> watches() const = 0;

  // Called for every event on a watched variable, before any propagation.
  // Returns whether the propagator should be scheduled.
  virtual bool wake(VarStore&, int /*local*/, unsigned /*events*/) { return true; }

  virtual PropStatus propagate(VarStore& store) = 0;

  // Ground re-check once every watched variable is fixed.
  virtual bool satisfied(const VarStore& store) const = 0;

  // A single call reaches this propagator's own fixpoint.
  virtual bool idempotent() const { return false; }
};

}  // namespace msetord
