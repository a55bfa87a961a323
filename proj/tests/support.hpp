#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcst/graph.hpp"
#include "dcst/index_set.hpp"
#include "dcst/instance.hpp"
#include "dcst/matroid.hpp"

namespace dcst::testing {

// Deterministic sampling helper (mt19937_64 + rejection, so sequences are
// identical on every platform).
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t residue = (max % k + 1) % k;
        std::uint64_t r = engine_();
        while (residue != 0 && r > max - residue) r = engine_();
        return r % k;
    }

    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return static_cast<long long>(static_cast<std::uint64_t>(lo) + below(span));
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

// Graph builders.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Index of the edge {u, v}; fails the test program if absent.
int edge_index(const Graph& g, int u, int v);

EdgeSet edges_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs);

// (v, alpha, beta) triples over vertex count n.
DegreeBounds bounds_of(int n, std::initializer_list<std::array<int, 3>> triples);

Instance make_instance(Graph g, DegreeBounds b, std::vector<long long> weights = {});

// All 2^m subsets in numeric order of their characteristic bits.
std::vector<EdgeSet> all_edge_subsets(int m);

// Every (n-1)-edge set whose cut counts at constrained vertices lie within
// the bounds: the degree-bound matroid's bases straight from the definition.
std::vector<EdgeSet> all_m1_bases(const Graph& g, const DegreeBounds& b);

// Rank via a basis list: the largest overlap between x and any basis.
int rank_from_bases(const std::vector<EdgeSet>& bases, const EdgeSet& x);

// min over all subsets x of r1(x) + r2(complement of x).
int brute_minmax(const MatroidOracle& m1, const MatroidOracle& m2);

// Greedy over a shuffled edge order, stopping at a random size; independent
// in both matroids.
EdgeSet random_common_independent(TestRng& rng, const MatroidOracle& m1, const MatroidOracle& m2);

// MatroidOracle built from an explicit basis list; keeps the inherited
// generic exchange context, so engine runs over it exercise that path.
class BasisListMatroid final : public MatroidOracle {
public:
    BasisListMatroid(int ground, std::vector<EdgeSet> bases)
        : ground_(ground), bases_(std::move(bases)) {}
    int ground_size() const override { return ground_; }
    bool is_independent(const EdgeSet& x) const override { return rank(x) == x.size(); }
    int rank(const EdgeSet& x) const override { return rank_from_bases(bases_, x); }

private:
    int ground_;
    std::vector<EdgeSet> bases_;
};

struct SampleOptions {
    int n = 5;
    bool force_connected = true;
    int max_constrained = 4;
    int alpha_hi = 3;           // alpha, beta drawn uniformly in [0, alpha_hi]/[0, beta_hi]
    int beta_hi = 3;            // with the two swapped into order
    long long weight_lo = 0;
    long long weight_hi = 0;
    double edge_prob = 0.5;     // keep probability for each non-tree pair
};

// Random instance: (optionally tree-seeded connected) graph, greedy random
// stable constrained set, ordered bound pairs, uniform weights.
Instance sample_instance(TestRng& rng, const SampleOptions& opt);

// Fixture instances; JSON twins live in tests/fixtures/.
Instance k4_instance();
Instance two_triangles_apex_instance();
Instance c5_beta_instance();
Instance c4_double_instance();
Instance p3_tight_instance();

}  // namespace dcst::testing
