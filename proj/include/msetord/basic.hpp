#pragma once

#include <memory>
#include <vector>

#include "msetord/propagator.hpp"

namespace msetord {

// Removes the value of each fixed variable from the others. Weaker than
// matching-based filtering: <{1,2},{1,2},{1,2}> is not refuted until something
// is fixed.
class AllDifferentPropagator final : public Propagator {
 public:
  explicit AllDifferentPropagator(std::vector<VarId> vars);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  std::vector<VarId> vars_;
};

// Positive table; every surviving value has a tuple of live values.
class TablePropagator final : public Propagator {
 public:
  TablePropagator(std::vector<VarId> vars, std::vector<std::vector<int>> tuples);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  std::vector<VarId> vars_;
  std::vector<std::vector<int>> tuples_;
};

enum class Relation { Le, Eq };

// sum coeffs[i] * vars[i] (<= | =) rhs, bounds consistency.
class LinearPropagator final : public Propagator {
 public:
  LinearPropagator(std::vector<long> coeffs, std::vector<VarId> vars, Relation rel, long rhs);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

 private:
  std::vector<long> coeffs_;
  std::vector<VarId> vars_;
  Relation rel_;
  long rhs_;
};

// b <-> (x = y), b in {0,1}.
class ReifiedEqPropagator final : public Propagator {
 public:
  ReifiedEqPropagator(VarId x, VarId y, VarId b);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;

 private:
  VarId x_, y_, b_;
};

// r1 = r2 -> body. The body sees every event on its own variables so that any
// incremental state stays current; it only runs once r1 and r2 are fixed to the
// same value, and the wrapper is entailed once they cannot be equal.
class ConditionalPropagator final : public Propagator {
 public:
  ConditionalPropagator(VarId r1, VarId r2, std::unique_ptr<Propagator> body);

  std::vector<Watch> watches() const override;
  bool wake(VarStore& store, int local, unsigned events) override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return body_->idempotent(); }

  const Propagator& body() const { return *body_; }

 private:
  bool active(const VarStore& store) const;

  VarId r1_, r2_;
  std::unique_ptr<Propagator> body_;
};

}  // namespace msetord
