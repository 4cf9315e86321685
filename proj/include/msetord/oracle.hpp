#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace msetord {

// One sorted value list per variable.
using Domains = std::vector<std::vector<int>>;

using Checker = std::function<bool(std::span<const int>)>;
using PairChecker = std::function<bool(std::span<const int>, std::span<const int>)>;

inline constexpr uint64_t kDefaultEnumerationCap = 10'000'000;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Supported values of every variable, or nullopt when nothing satisfies.
std::optional<Domains> brute_force_gac(const Checker& check, const Domains& doms,
                                       uint64_t cap = kDefaultEnumerationCap);
// X domains followed by Y domains in the result.
std::optional<Domains> brute_force_gac(const PairChecker& check, const Domains& x,
                                       const Domains& y, uint64_t cap = kDefaultEnumerationCap);

bool brute_force_disentailed(const Checker& check, const Domains& doms,
                             uint64_t cap = kDefaultEnumerationCap);
bool brute_force_entailed(const Checker& check, const Domains& doms,
                          uint64_t cap = kDefaultEnumerationCap);

// Splits a flat assignment after the first nx entries.
Checker split_checker(PairChecker check, size_t nx);

struct InstanceSpec {
  uint64_t seed = 0;
  int d = 0;  // values are 0..d-1
  Domains x, y;
};

struct GeneratorLimits {
  int max_len = 5;
  int max_values = 5;
  int max_domain = 3;
  bool equal_lengths = true;
};

// Deterministic on every platform: draws come straight from mt19937_64.
InstanceSpec random_instance(uint64_t seed, const GeneratorLimits& lim = {});

struct FixpointRelation {
  enum Kind { Equal, LeftStrictlyStronger, RightStrictlyStronger, Incomparable };
  Kind kind = Equal;
  // For strict relations: a value kept by the weaker side only.
  int var = -1;
  int value = 0;
};

// nullopt stands for a failed (empty) fixpoint, which is stronger than any
// non-failed one.
FixpointRelation classify_fixpoints(const std::optional<Domains>& left,
                                    const std::optional<Domains>& right);

}  // namespace msetord
