#pragma once

#include <utility>
#include <vector>

#include "msetord/bench.hpp"

namespace msetord::bench {

// Posts vectors[i] ord vectors[j] for every listed pair.
void post_orderings(Model& m, const std::vector<std::vector<VarId>>& vectors,
                    const std::vector<std::pair<size_t, size_t>>& pairs, Ordering ord,
                    const RunConfig& cfg);

Symmetry symmetry_or_throw(const RunConfig& cfg);

}  // namespace msetord::bench
