#include "dcst/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dcst/graph.hpp"
#include "dcst/instance.hpp"

namespace dcst {

namespace {

// mt19937_64 output is pinned by the standard; rejection sampling keeps the
// reduction to a range platform-independent too.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t residue = (max % k + 1) % k;  // 2^64 mod k
        std::uint64_t r = engine_();
        while (residue != 0 && r > max - residue) r = engine_();
        return r % k;
    }

    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return static_cast<long long>(static_cast<std::uint64_t>(lo) + below(span));
    }

    bool chance(double p) {
        const std::uint64_t scale = std::uint64_t{1} << 53;
        return below(scale) < static_cast<std::uint64_t>(p * static_cast<double>(scale));
    }

private:
    std::mt19937_64 engine_;
};

constexpr int kMaxGenVertices = 2000;

}  // namespace

GenResult generate_instance(const GenParams& p) {
    if (p.n < 1) throw std::invalid_argument("n must be at least 1");
    if (p.n > kMaxGenVertices)
        throw std::invalid_argument("n is limited to " + std::to_string(kMaxGenVertices) +
                                    " for generation");
    if (p.m && p.edge_prob) throw std::invalid_argument("give either m or edge-prob, not both");
    if (!p.m && !p.edge_prob) throw std::invalid_argument("one of m or edge-prob is required");
    if (p.edge_prob && (*p.edge_prob < 0.0 || *p.edge_prob > 1.0))
        throw std::invalid_argument("edge-prob must lie in [0, 1]");
    if (p.stable_size < 0 || p.stable_size > p.n)
        throw std::invalid_argument("stable-size must lie in [0, n]");
    if (p.alpha_max < 0) throw std::invalid_argument("alpha-max must be nonnegative");
    if (p.beta_max < 0) throw std::invalid_argument("beta-max must be nonnegative");
    if (p.weight_lo > p.weight_hi) throw std::invalid_argument("weight range is empty");
    const long long pair_count = static_cast<long long>(p.n) * (p.n - 1) / 2;
    if (p.m && (*p.m < 0 || *p.m > pair_count))
        throw std::invalid_argument("m must lie in [0, n(n-1)/2]");
    if (p.m && p.connected && *p.m < p.n - 1)
        throw std::invalid_argument("a connected graph needs at least n-1 edges");

    Rng rng(p.seed);
    const int n = p.n;
    std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto has_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return used[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(v)] != 0;
    };
    auto mark_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        used[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(v)] = 1;
    };

    std::vector<std::pair<int, int>> pairs;
    if (p.connected) {
        // random recursive tree: attach each vertex to an earlier one
        for (int v = 1; v < n; ++v) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
            pairs.emplace_back(u, v);
            mark_edge(u, v);
        }
    }
    if (p.m) {
        int extras = *p.m - static_cast<int>(pairs.size());
        std::vector<std::pair<int, int>> free_pairs;
        free_pairs.reserve(static_cast<std::size_t>(pair_count) - pairs.size());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!has_edge(u, v)) free_pairs.emplace_back(u, v);
        for (int i = 0; i < extras; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(free_pairs.size() -
                                                               static_cast<std::size_t>(i)));
            std::swap(free_pairs[static_cast<std::size_t>(i)], free_pairs[j]);
            pairs.push_back(free_pairs[static_cast<std::size_t>(i)]);
            mark_edge(pairs.back().first, pairs.back().second);
        }
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (has_edge(u, v)) continue;
                if (rng.chance(*p.edge_prob)) {
                    pairs.emplace_back(u, v);
                    mark_edge(u, v);
                }
            }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<Edge> edges;
    std::vector<long long> weights;
    edges.reserve(pairs.size());
    weights.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        edges.push_back({u, v});
        weights.push_back(rng.range(p.weight_lo, p.weight_hi));
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    for (int i = 0; i < n; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(order[static_cast<std::size_t>(i)], order[j]);
    }
    std::vector<int> picked;
    for (int v : order) {
        if (static_cast<int>(picked.size()) == p.stable_size) break;
        bool clash = false;
        for (int w : picked)
            if (has_edge(v, w)) clash = true;
        if (!clash) picked.push_back(v);
    }
    std::sort(picked.begin(), picked.end());

    DegreeBounds bounds{VertexSet(n), std::vector<int>(static_cast<std::size_t>(n), 0),
                        std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int v : picked) {
        bounds.constrained.insert(v);
        int alpha = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.alpha_max) + 1));
        int extra = std::max(0, p.beta_max - alpha);
        int beta = alpha + static_cast<int>(rng.below(static_cast<std::uint64_t>(extra) + 1));
        bounds.alpha[static_cast<std::size_t>(v)] = alpha;
        bounds.beta[static_cast<std::size_t>(v)] = beta;
    }

    Instance inst{Graph(n, std::move(edges)), std::move(bounds), std::move(weights)};
    GenResult out;
    out.instance_text = instance_to_text(inst);
    if (static_cast<int>(picked.size()) < p.stable_size)
        out.note = "stable set has size " + std::to_string(picked.size()) + "; requested " +
                   std::to_string(p.stable_size);
    return out;
}

}  // namespace dcst
