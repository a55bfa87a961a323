#pragma once

#include <optional>
#include <vector>

#include "dcst/index_set.hpp"
#include "dcst/matroid.hpp"

namespace dcst {

// Outcome of a matroid-intersection run: a maximum common independent set
// (capped at the requested target size) plus, when the target is out of
// reach, a set X certifying maximality via r1(X) + r2(E \ X) = |common|.
// cost is the total weight of the common set (zero in unweighted mode).
struct IntersectionResult {
    EdgeSet common;
    int size = 0;
    std::optional<EdgeSet> minimizer;
    long long cost = 0;
};

// Maximum-cardinality common independent set, by shortest augmenting paths
// in the exchange graph; stops early once |common| = target.
IntersectionResult max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2,
                                          int target);

// Minimum total weight among common independent sets of size target (or of
// maximum size, when target is unreachable), by successive shortest
// (cost, then arc count) augmenting paths. Deterministic: ties beyond that
// are broken toward the lexicographically smallest path.
IntersectionResult min_weight_common_basis(const MatroidOracle& m1, const MatroidOracle& m2,
                                           const std::vector<long long>& weights, int target);

}  // namespace dcst
