#pragma once

#include <string>
#include <vector>

#include "dcst/graph.hpp"
#include "dcst/matroid.hpp"

namespace dcst {

// One solver input: graph, per-edge weights, degree bounds.
struct Instance {
    Graph graph;
    DegreeBounds bounds;
    std::vector<long long> weights;
};

// Parses the canonical instance JSON
//   {"n": int, "edges": [[u, v, w], ...], "constrained": [{"v":..,"alpha":..,"beta":..}, ...]}
// and validates every documented invariant (1 <= n; 0 <= u < v < n; no
// duplicate pairs; constrained vertices unique, stable, with
// 0 <= alpha <= beta). Throws ParseError naming the offending field.
Instance parse_instance(const std::string& text);

// Canonical serialization; parse_instance round-trips it.
std::string instance_to_text(const Instance& inst);

}  // namespace dcst
