#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace dcst {

struct GenParams {
    int n = 0;
    std::optional<int> m;               // exactly one of m / edge_prob
    std::optional<double> edge_prob;
    int stable_size = 0;
    int alpha_max = 0;
    int beta_max = 0;
    long long weight_lo = 1;
    long long weight_hi = 10;
    std::uint64_t seed = 0;
    bool connected = false;
};

struct GenResult {
    std::string instance_text;
    std::string note;  // nonempty when the request was met only partially
};

// Deterministic random-instance generator: identical parameters produce
// identical bytes on every platform. The constrained set is grown greedily
// over a shuffled vertex order; when fewer than stable_size vertices fit,
// the shortfall is reported through note. Throws std::invalid_argument on
// impossible parameter combinations.
GenResult generate_instance(const GenParams& p);

}  // namespace dcst
