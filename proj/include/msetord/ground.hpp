#pragma once

#include <span>
#include <vector>

#include "msetord/domain.hpp"

namespace msetord {

// Index 0 is the most significant entry.
using GroundVector = std::vector<int>;

enum class Cmp { Less, Equal, Greater };

// counts[u - v] holds the number of occurrences of v, for l <= v <= u.
struct OccVector {
  std::vector<int> counts;
  int u = 0;
  int l = 0;

  int& at(int v) { return counts[u - v]; }
  int at(int v) const { return counts[u - v]; }
  friend bool operator==(const OccVector&, const OccVector&) = default;
};

GroundVector floor_of(std::span<const VarId> xs, const VarStore& store);
GroundVector ceiling_of(std::span<const VarId> xs, const VarStore& store);

OccVector occ_of(std::span<const int> x, int u, int l);

GroundVector sort_desc(GroundVector x);

// Equal lengths required.
Cmp lex_cmp(std::span<const int> a, std::span<const int> b);
Cmp lex_cmp(const OccVector& a, const OccVector& b);

// Multiset comparison on the recursive definition: compare maxima, drop one
// copy of a shared maximum and recurse; an exhausted side is the smaller one.
Cmp mset_cmp(std::span<const int> a, std::span<const int> b);

// Order-preserving renaming of the values occurring in a family of domains onto
// 0..d-1.
class ValueMap {
 public:
  ValueMap() = default;
  explicit ValueMap(std::vector<int> sorted_values);

  int size() const { return static_cast<int>(values_.size()); }
  int value(int rank) const { return values_[rank]; }
  int rank(int value) const;
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
  std::vector<int> dense_;  // value - values_.front() -> rank, -1 if absent
};

struct Normalized {
  ValueMap map;
  std::vector<std::vector<int>> domains;
};

Normalized normalize_values(std::span<const std::vector<int>> domains);
ValueMap value_map_of(std::span<const VarId> xs, const VarStore& store);

}  // namespace msetord
