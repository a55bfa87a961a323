#include <optional>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "dcst/intersection.hpp"
#include "dcst/matroid.hpp"
#include "support.hpp"

using namespace dcst;
using namespace dcst::testing;

namespace {

PartitionMatroidM1 must_make_m1(const Graph& g, const DegreeBounds& b) {
    auto made = make_m1(g, b);
    REQUIRE(std::holds_alternative<PartitionMatroidM1>(made));
    return std::get<PartitionMatroidM1>(std::move(made));
}

void check_minimizer(const MatroidOracle& m1, const MatroidOracle& m2,
                     const IntersectionResult& res) {
    REQUIRE(res.minimizer.has_value());
    CHECK(m1.rank(*res.minimizer) + m2.rank(res.minimizer->complement()) == res.size);
}

}  // namespace

TEST_CASE("slack bounds leave the full ground set reachable") {
    Graph g = path_graph(3);
    PartitionMatroidM1 m1 = must_make_m1(g, bounds_of(3, {{1, 0, 2}}));
    GraphicMatroidM2 m2(g);
    auto res = max_common_independent(m1, m2, 2);
    CHECK(res.size == 2);
    CHECK(res.common == EdgeSet(2).complement());
    CHECK_FALSE(res.minimizer.has_value());
    CHECK(res.cost == 0);

    auto early = max_common_independent(m1, m2, 1);
    CHECK(early.size == 1);
    CHECK_FALSE(early.minimizer.has_value());
}

TEST_CASE("apex bottleneck stops one short and certifies it") {
    Instance inst = two_triangles_apex_instance();
    PartitionMatroidM1 m1 = must_make_m1(inst.graph, inst.bounds);
    GraphicMatroidM2 m2(inst.graph);
    auto res = max_common_independent(m1, m2, 6);
    CHECK(res.size == 5);
    CHECK(m1.is_independent(res.common));
    CHECK(m2.is_independent(res.common));
    check_minimizer(m1, m2, res);

    // the bottleneck size itself is still reachable, so no minimizer then
    auto exact = max_common_independent(m1, m2, 5);
    CHECK(exact.size == 5);
    CHECK_FALSE(exact.minimizer.has_value());
}

TEST_CASE("double-neighbor lower bounds cap the common size at three") {
    Instance inst = c4_double_instance();
    PartitionMatroidM1 m1 = must_make_m1(inst.graph, inst.bounds);
    GraphicMatroidM2 m2(inst.graph);
    auto res = max_common_independent(m1, m2, 4);
    CHECK(res.size == 3);
    check_minimizer(m1, m2, res);
}

TEST_CASE("weighted tree through a capped hub") {
    Instance inst = k4_instance();
    PartitionMatroidM1 m1 = must_make_m1(inst.graph, inst.bounds);
    GraphicMatroidM2 m2(inst.graph);
    auto res = min_weight_common_basis(m1, m2, inst.weights, 3);
    CHECK(res.size == 3);
    CHECK(res.cost == 10);
    CHECK(res.common == EdgeSet::of(6, {0, 3, 4}));
    CHECK_FALSE(res.minimizer.has_value());
}

TEST_CASE("no bounds reduces to a minimum spanning tree") {
    Instance inst = k4_instance();
    PartitionMatroidM1 m1 = must_make_m1(inst.graph, bounds_of(4, {}));
    GraphicMatroidM2 m2(inst.graph);
    auto res = min_weight_common_basis(m1, m2, inst.weights, 3);
    CHECK(res.size == 3);
    CHECK(res.cost == 6);
    CHECK(res.common == EdgeSet::of(6, {0, 1, 2}));
}

TEST_CASE("uniform weights keep the unweighted choice and scale the cost") {
    Instance inst = k4_instance();
    PartitionMatroidM1 m1 = must_make_m1(inst.graph, inst.bounds);
    GraphicMatroidM2 m2(inst.graph);
    auto flat = min_weight_common_basis(m1, m2, {7, 7, 7, 7, 7, 7}, 3);
    auto zero = min_weight_common_basis(m1, m2, {0, 0, 0, 0, 0, 0}, 3);
    CHECK(flat.size == 3);
    CHECK(flat.cost == 21);
    CHECK(flat.common == zero.common);
}

TEST_CASE("shifting every weight moves the cost but not the answer") {
    TestRng rng(31);
    int done = 0;
    while (done < 30) {
        SampleOptions opt;
        opt.n = 2 + static_cast<int>(rng.below(5));
        opt.weight_lo = -8;
        opt.weight_hi = 8;
        Instance inst = sample_instance(rng, opt);
        auto made = make_m1(inst.graph, inst.bounds);
        if (!std::holds_alternative<PartitionMatroidM1>(made)) continue;
        const auto& m1 = std::get<PartitionMatroidM1>(made);
        GraphicMatroidM2 m2(inst.graph);
        const int target = inst.graph.vertex_count() - 1;
        auto base = min_weight_common_basis(m1, m2, inst.weights, target);
        const long long shift = rng.range(-5, 5);
        std::vector<long long> shifted = inst.weights;
        for (long long& w : shifted) w += shift;
        auto moved = min_weight_common_basis(m1, m2, shifted, target);
        CHECK(moved.common == base.common);
        CHECK(moved.size == base.size);
        CHECK(moved.cost == base.cost + shift * base.size);
        ++done;
    }
}

TEST_CASE("engine agrees with exhaustive search on small instances") {
    TestRng rng(404);
    int done = 0;
    while (done < 60) {
        SampleOptions opt;
        opt.n = 2 + static_cast<int>(rng.below(5));
        opt.force_connected = rng.coin();
        opt.weight_lo = -6;
        opt.weight_hi = 6;
        Instance inst = sample_instance(rng, opt);
        const int m = inst.graph.edge_count();
        if (m > 10) continue;
        auto made = make_m1(inst.graph, inst.bounds);
        if (!std::holds_alternative<PartitionMatroidM1>(made)) continue;
        const auto& m1 = std::get<PartitionMatroidM1>(made);
        GraphicMatroidM2 m2(inst.graph);
        const int target = inst.graph.vertex_count() - 1;
        auto res = min_weight_common_basis(m1, m2, inst.weights, target);

        int best_size = 0;
        long long best_cost = 0;
        for (const EdgeSet& x : all_edge_subsets(m)) {
            if (!m1.is_independent(x) || !m2.is_independent(x)) continue;
            if (x.size() > target) continue;
            long long cost = 0;
            x.for_each([&](int e) { cost += inst.weights[static_cast<std::size_t>(e)]; });
            if (x.size() > best_size || (x.size() == best_size && cost < best_cost)) {
                best_size = x.size();
                best_cost = cost;
            }
        }
        CHECK(res.size == best_size);
        CHECK(res.cost == best_cost);
        CHECK(res.size == std::min(target, brute_minmax(m1, m2)));
        if (res.size < target)
            check_minimizer(m1, m2, res);
        else
            CHECK_FALSE(res.minimizer.has_value());
        ++done;
    }
}

TEST_CASE("explicit-basis oracles reproduce the specialized run") {
    for (const Instance& inst :
         {k4_instance(), two_triangles_apex_instance(), c4_double_instance()}) {
        PartitionMatroidM1 m1 = must_make_m1(inst.graph, inst.bounds);
        GraphicMatroidM2 m2(inst.graph);
        const int m = inst.graph.edge_count();
        BasisListMatroid w1(m, all_m1_bases(inst.graph, inst.bounds));

        std::vector<EdgeSet> forests;
        for (const EdgeSet& x : all_edge_subsets(m))
            if (x.size() == m2.rank(EdgeSet(m).complement()) && m2.is_independent(x))
                forests.push_back(x);
        BasisListMatroid w2(m, forests);

        const int target = inst.graph.vertex_count() - 1;
        auto fast = min_weight_common_basis(m1, m2, inst.weights, target);
        auto slow = min_weight_common_basis(w1, w2, inst.weights, target);
        CHECK(fast.common == slow.common);
        CHECK(fast.size == slow.size);
        CHECK(fast.cost == slow.cost);
        CHECK(fast.minimizer.has_value() == slow.minimizer.has_value());
        if (fast.minimizer.has_value()) CHECK(*fast.minimizer == *slow.minimizer);
    }
}

TEST_CASE("empty ground set yields the empty certificate") {
    Graph g(1, {});
    PartitionMatroidM1 m1 = must_make_m1(g, bounds_of(1, {}));
    GraphicMatroidM2 m2(g);
    auto none = max_common_independent(m1, m2, 0);
    CHECK(none.size == 0);
    CHECK_FALSE(none.minimizer.has_value());
    auto starved = max_common_independent(m1, m2, 1);
    CHECK(starved.size == 0);
    REQUIRE(starved.minimizer.has_value());
    CHECK(starved.minimizer->empty());
}

TEST_CASE("weight totals refuse to wrap around") {
    Graph g = path_graph(3);
    PartitionMatroidM1 m1 = must_make_m1(g, bounds_of(3, {}));
    GraphicMatroidM2 m2(g);
    std::vector<long long> huge{1LL << 62, 1LL << 62};
    CHECK_THROWS_AS(min_weight_common_basis(m1, m2, huge, 2), std::overflow_error);
}

TEST_CASE("argument validation") {
    Graph g = path_graph(3);
    PartitionMatroidM1 m1 = must_make_m1(g, bounds_of(3, {}));
    GraphicMatroidM2 m2(g);
    CHECK_THROWS_AS(max_common_independent(m1, m2, -1), std::invalid_argument);
    CHECK_THROWS_AS(min_weight_common_basis(m1, m2, {1}, 2), std::invalid_argument);
    Graph other = path_graph(4);
    GraphicMatroidM2 mismatched(other);
    CHECK_THROWS_AS(max_common_independent(m1, mismatched, 1), std::invalid_argument);
}
