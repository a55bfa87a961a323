#include "support.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dcst::testing {

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    assert(n >= 3);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

int edge_index(const Graph& g, int u, int v) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
    }
    throw std::logic_error("test asked for an edge the graph does not have");
}

EdgeSet edges_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
    EdgeSet s(g.edge_count());
    for (const auto& [u, v] : pairs) s.insert(edge_index(g, u, v));
    return s;
}

DegreeBounds bounds_of(int n, std::initializer_list<std::array<int, 3>> triples) {
    DegreeBounds b{VertexSet(n), std::vector<int>(static_cast<std::size_t>(n), 0),
                   std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (const auto& t : triples) {
        b.constrained.insert(t[0]);
        b.alpha[static_cast<std::size_t>(t[0])] = t[1];
        b.beta[static_cast<std::size_t>(t[0])] = t[2];
    }
    return b;
}

Instance make_instance(Graph g, DegreeBounds b, std::vector<long long> weights) {
    if (weights.empty()) weights.assign(static_cast<std::size_t>(g.edge_count()), 0);
    assert(static_cast<int>(weights.size()) == g.edge_count());
    return Instance{std::move(g), std::move(b), std::move(weights)};
}

std::vector<EdgeSet> all_edge_subsets(int m) {
    assert(m >= 0 && m <= 20);
    std::vector<EdgeSet> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        EdgeSet s(m);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) s.insert(e);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<EdgeSet> all_m1_bases(const Graph& g, const DegreeBounds& b) {
    const int m = g.edge_count();
    const int k = g.vertex_count() - 1;
    std::vector<EdgeSet> bases;
    if (k > m) return bases;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    std::vector<int> cut(static_cast<std::size_t>(g.vertex_count()));
    auto emit = [&] {
        std::fill(cut.begin(), cut.end(), 0);
        for (int e : pick) {
            ++cut[static_cast<std::size_t>(g.edge(e).u)];
            ++cut[static_cast<std::size_t>(g.edge(e).v)];
        }
        bool ok = true;
        b.constrained.for_each([&](int v) {
            int c = cut[static_cast<std::size_t>(v)];
            if (c < b.alpha[static_cast<std::size_t>(v)] || c > b.beta[static_cast<std::size_t>(v)])
                ok = false;
        });
        if (!ok) return;
        EdgeSet s(m);
        for (int e : pick) s.insert(e);
        bases.push_back(std::move(s));
    };
    if (k == 0) {
        bases.emplace_back(m);
        return bases;
    }
    while (true) {
        emit();
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return bases;
}

int rank_from_bases(const std::vector<EdgeSet>& bases, const EdgeSet& x) {
    int best = 0;
    for (const EdgeSet& basis : bases) {
        int overlap = 0;
        x.for_each([&](int e) {
            if (basis.contains(e)) ++overlap;
        });
        best = std::max(best, overlap);
    }
    return best;
}

int brute_minmax(const MatroidOracle& m1, const MatroidOracle& m2) {
    const int m = m1.ground_size();
    assert(m == m2.ground_size() && m <= 20);
    int best = m + 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        EdgeSet x(m);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) x.insert(e);
        best = std::min(best, m1.rank(x) + m2.rank(x.complement()));
    }
    return best;
}

EdgeSet random_common_independent(TestRng& rng, const MatroidOracle& m1,
                                  const MatroidOracle& m2) {
    const int m = m1.ground_size();
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) order[static_cast<std::size_t>(e)] = e;
    for (int i = m - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    const auto target = rng.below(static_cast<std::uint64_t>(m) + 1);
    EdgeSet current(m);
    for (int e : order) {
        if (static_cast<std::uint64_t>(current.size()) == target) break;
        EdgeSet grown = current;
        grown.insert(e);
        if (m1.is_independent(grown) && m2.is_independent(grown)) current = std::move(grown);
    }
    return current;
}

Instance sample_instance(TestRng& rng, const SampleOptions& opt) {
    const int n = opt.n;
    assert(n >= 1);
    std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        std::size_t key = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(v);
        if (present[key]) return;
        present[key] = 1;
        edges.push_back({u, v});
    };
    if (opt.force_connected)
        for (int v = 1; v < n; ++v) add(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    const std::uint64_t scale = std::uint64_t{1} << 20;
    const auto threshold = static_cast<std::uint64_t>(opt.edge_prob * static_cast<double>(scale));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::size_t key = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(v);
            if (!present[key] && rng.below(scale) < threshold) add(u, v);
        }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    const int want = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(std::min(opt.max_constrained, n)) + 1));
    DegreeBounds b{VertexSet(n), std::vector<int>(static_cast<std::size_t>(n), 0),
                   std::vector<int>(static_cast<std::size_t>(n), 0)};
    int taken = 0;
    for (int v : order) {
        if (taken == want) break;
        bool clashes = false;
        b.constrained.for_each([&](int u) {
            int lo = std::min(u, v), hi = std::max(u, v);
            if (present[static_cast<std::size_t>(lo) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(hi)])
                clashes = true;
        });
        if (clashes) continue;
        b.constrained.insert(v);
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.alpha_hi) + 1));
        int bb = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.beta_hi) + 1));
        if (a > bb) std::swap(a, bb);
        b.alpha[static_cast<std::size_t>(v)] = a;
        b.beta[static_cast<std::size_t>(v)] = bb;
        ++taken;
    }

    std::vector<long long> weights;
    weights.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        weights.push_back(rng.range(opt.weight_lo, opt.weight_hi));
    return Instance{Graph(n, std::move(edges)), std::move(b), std::move(weights)};
}

Instance k4_instance() {
    return make_instance(complete_graph(4), bounds_of(4, {{0, 0, 1}}), {1, 2, 3, 4, 5, 6});
}

Instance two_triangles_apex_instance() {
    Graph g(7, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    return make_instance(std::move(g), bounds_of(7, {{0, 0, 1}}),
                         {1, 1, 1, 1, 1, 1, 1, 1});
}

Instance c5_beta_instance() {
    return make_instance(cycle_graph(5), bounds_of(5, {{0, 0, 1}, {2, 0, 1}}), {1, 1, 1, 1, 1});
}

Instance c4_double_instance() {
    Graph g(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});
    return make_instance(std::move(g), bounds_of(5, {{0, 2, 2}, {1, 2, 2}}), {1, 1, 1, 1, 1});
}

Instance p3_tight_instance() {
    return make_instance(path_graph(3), bounds_of(3, {{1, 1, 1}}), {1, 1});
}

}  // namespace dcst::testing
