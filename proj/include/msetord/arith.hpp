#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "msetord/ground.hpp"
#include "msetord/propagator.hpp"

namespace msetord {

using BigInt = boost::multiprecision::cpp_int;

// sum base^rank(X_i) <= sum base^rank(Y_i) (or <), ranks taken over the values
// of both vectors. Filtering is bounds consistency on the sum in exact
// arithmetic.
class ArithMsetPropagator final : public Propagator {
 public:
  ArithMsetPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                      bool strict);
  // Explicit base, at least 2.
  ArithMsetPropagator(const VarStore& store, std::vector<VarId> x, std::vector<VarId> y,
                      bool strict, int base);

  // Smallest base for which the weighted sums order multisets of these lengths:
  // the common length for equal lengths of at least 2, otherwise one more than
  // the longer length.
  static int default_base(size_t nx, size_t ny);

  std::vector<Watch> watches() const override;
  PropStatus propagate(VarStore& store) override;
  bool satisfied(const VarStore& store) const override;
  bool idempotent() const override { return true; }

  int base() const { return base_; }

 private:
  const BigInt& weight(int value) const { return weights_[map_.rank(value)]; }

  std::vector<VarId> x_, y_;
  bool strict_;
  int base_;
  ValueMap map_;
  std::vector<BigInt> weights_;
};

}  // namespace msetord
