#include "dcst/certify.hpp"

#include <algorithm>
#include <vector>

#include "dcst/disjoint_set.hpp"
#include "dcst/errors.hpp"

namespace dcst {

namespace {

long long alpha_lhs(const DegreeBounds& b, const VertexSet& s) {
    long long lhs = 0;
    s.for_each([&](int v) { lhs += b.alpha[static_cast<std::size_t>(v)]; });
    return lhs;
}

long long alpha_rhs(const Graph& g, const VertexSet& s) {
    return s.size() + neighbors(g, s).size() - 1;
}

long long beta_lhs(const DegreeBounds& b, const VertexSet& s) {
    long long lhs = 0;
    s.for_each([&](int v) { lhs += b.beta[static_cast<std::size_t>(v)]; });
    return lhs;
}

long long beta_rhs(const Graph& g, const VertexSet& s) {
    return component_count_after_removal(g, s) + s.size() - 1;
}

// Visits subsets of `u` (member indices, ascending) in increasing
// cardinality, lexicographic within a cardinality. Stops when fn returns
// true.
template <class F>
void for_each_subset(const std::vector<int>& u, int n, bool include_empty, F&& fn) {
    const int usz = static_cast<int>(u.size());
    for (int k = include_empty ? 0 : 1; k <= usz; ++k) {
        std::vector<int> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s(n);
            for (int i : c) s.insert(u[static_cast<std::size_t>(i)]);
            if (fn(s)) return;
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == usz - k + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

void require_subset_limit(const DegreeBounds& b, int subset_limit) {
    int usz = b.constrained.size();
    if (usz > subset_limit) throw LimitExceeded("constrained-set size", subset_limit, usz);
}

// Spanning-tree search by include/exclude recursion over edge indices.
// Include branches come first, so trees are visited in lexicographic order
// of their sorted edge-index lists and strict cost improvement keeps the
// lexicographically smallest optimum.
struct TreeEnumerator {
    const Graph& g;
    const DegreeBounds& b;
    const std::vector<long long>* weights;
    int n;
    int m;
    std::vector<int> chosen;
    std::vector<int> deg;
    std::vector<int> rem_inc;  // undecided edges incident to each vertex
    std::optional<EdgeSet> best;
    long long best_cost = 0;

    TreeEnumerator(const Graph& graph, const DegreeBounds& bounds,
                   const std::vector<long long>* w)
        : g(graph), b(bounds), weights(w), n(graph.vertex_count()), m(graph.edge_count()),
          deg(static_cast<std::size_t>(n), 0), rem_inc(static_cast<std::size_t>(n), 0) {
        for (int e = 0; e < m; ++e) {
            ++rem_inc[static_cast<std::size_t>(g.edge(e).u)];
            ++rem_inc[static_cast<std::size_t>(g.edge(e).v)];
        }
    }

    bool lower_bounds_reachable() const {
        bool ok = true;
        b.constrained.for_each([&](int v) {
            auto i = static_cast<std::size_t>(v);
            if (deg[i] + rem_inc[i] < b.alpha[i]) ok = false;
        });
        return ok;
    }

    bool still_connectable(const DisjointSet& ds, int idx) const {
        DisjointSet t = ds;
        for (int e = idx; e < m; ++e) t.unite(g.edge(e).u, g.edge(e).v);
        return t.components() == 1;
    }

    void record() {
        bool ok = true;
        b.constrained.for_each([&](int v) {
            if (deg[static_cast<std::size_t>(v)] < b.alpha[static_cast<std::size_t>(v)]) ok = false;
        });
        if (!ok) return;
        long long cost = 0;
        for (int e : chosen) cost += weights ? (*weights)[static_cast<std::size_t>(e)] : 0;
        if (best && cost >= best_cost) return;
        EdgeSet t(m);
        for (int e : chosen) t.insert(e);
        best = t;
        best_cost = cost;
    }

    void search(int idx, DisjointSet& ds, int count) {
        if (count == n - 1) {
            record();
            return;
        }
        if (idx == m || count + (m - idx) < n - 1) return;
        const Edge& ed = g.edge(idx);
        auto ui = static_cast<std::size_t>(ed.u);
        auto vi = static_cast<std::size_t>(ed.v);
        --rem_inc[ui];
        --rem_inc[vi];
        bool cap_u = b.constrained.contains(ed.u) &&
                     deg[ui] + 1 > b.beta[ui];
        bool cap_v = b.constrained.contains(ed.v) &&
                     deg[vi] + 1 > b.beta[vi];
        if (!ds.connected(ed.u, ed.v) && !cap_u && !cap_v) {
            DisjointSet next = ds;
            next.unite(ed.u, ed.v);
            ++deg[ui];
            ++deg[vi];
            chosen.push_back(idx);
            if (lower_bounds_reachable()) search(idx + 1, next, count + 1);
            chosen.pop_back();
            --deg[ui];
            --deg[vi];
        }
        if (lower_bounds_reachable() && still_connectable(ds, idx + 1)) search(idx + 1, ds, count);
        ++rem_inc[ui];
        ++rem_inc[vi];
    }
};

}  // namespace

std::optional<Certificate> check_condition_alpha(const Graph& g, const DegreeBounds& b,
                                                 int subset_limit) {
    require_subset_limit(b, subset_limit);
    std::optional<Certificate> out;
    for_each_subset(b.constrained.members(), g.vertex_count(), false, [&](const VertexSet& s) {
        long long lhs = alpha_lhs(b, s);
        long long rhs = alpha_rhs(g, s);
        if (lhs > rhs) {
            out = Certificate{Certificate::Kind::Alpha, s, lhs, rhs};
            return true;
        }
        return false;
    });
    return out;
}

std::optional<Certificate> check_condition_beta(const Graph& g, const DegreeBounds& b,
                                                int subset_limit) {
    require_subset_limit(b, subset_limit);
    std::optional<Certificate> out;
    for_each_subset(b.constrained.members(), g.vertex_count(), true, [&](const VertexSet& s) {
        long long lhs = beta_lhs(b, s);
        long long rhs = beta_rhs(g, s);
        if (lhs < rhs) {
            out = Certificate{Certificate::Kind::Beta, s, lhs, rhs};
            return true;
        }
        return false;
    });
    return out;
}

OracleVerdict enumerate_feasible_trees(const Graph& g, const DegreeBounds& b,
                                       const std::vector<long long>* weights, int vertex_limit,
                                       int subset_limit) {
    if (g.vertex_count() > vertex_limit)
        throw LimitExceeded("vertex count", vertex_limit, g.vertex_count());
    TreeEnumerator en(g, b, weights);
    DisjointSet ds(g.vertex_count());
    en.search(0, ds, 0);
    OracleVerdict verdict;
    if (en.best) {
        verdict.feasible = true;
        verdict.best_tree = en.best;
        verdict.best_cost = en.best_cost;
        return verdict;
    }
    verdict.feasible = false;
    verdict.violating_set = check_condition_alpha(g, b, subset_limit);
    if (!verdict.violating_set) verdict.violating_set = check_condition_beta(g, b, subset_limit);
    if (!verdict.violating_set)
        throw InternalInvariantBroken("no tree found yet both conditions hold");
    return verdict;
}

Certificate extract_certificate(const Graph& g, const DegreeBounds& b, EdgeSet x,
                                Certificate::Kind* picked) {
    const int n = g.vertex_count();
    auto counts_of = [&](const EdgeSet& s) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        s.for_each([&](int e) {
            const Edge& ed = g.edge(e);
            if (b.constrained.contains(ed.u))
                ++c[static_cast<std::size_t>(ed.u)];
            else if (b.constrained.contains(ed.v))
                ++c[static_cast<std::size_t>(ed.v)];
        });
        return c;
    };
    auto strip = [&](EdgeSet& s, int v0) {
        for (const auto& [w, e] : g.adjacency(v0)) {
            (void)w;
            s.erase(e);
        }
    };

    auto [a_term, b_term] = partition_rank_terms(g, b, x);
    if (a_term <= b_term) {
        // Lower-bound side: drop cuts that are hit but below their lower
        // bound (classes are disjoint, so one ascending pass settles all),
        // then split the untouched constrained vertices by the components
        // of the bipartite graph they span with their neighborhoods.
        auto c = counts_of(x);
        b.constrained.for_each([&](int v) {
            auto i = static_cast<std::size_t>(v);
            if (c[i] > 0 && c[i] < b.alpha[i]) {
                strip(x, v);
                c[i] = 0;
            }
        });
        VertexSet s0(n);
        b.constrained.for_each([&](int v) {
            if (c[static_cast<std::size_t>(v)] == 0) s0.insert(v);
        });
        DisjointSet ds(n);
        s0.for_each([&](int v) {
            for (const auto& [w, e] : g.adjacency(v)) {
                (void)e;
                ds.unite(v, w);
            }
        });
        std::vector<int> group_of(static_cast<std::size_t>(n), -1);
        std::vector<VertexSet> groups;
        s0.for_each([&](int v) {
            int r = ds.find(v);
            if (group_of[static_cast<std::size_t>(r)] < 0) {
                group_of[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
                groups.emplace_back(n);
            }
            groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(r)])].insert(v);
        });
        for (const VertexSet& si : groups) {
            long long lhs = alpha_lhs(b, si);
            long long rhs = alpha_rhs(g, si);
            if (lhs > rhs) {
                Certificate cert{Certificate::Kind::Alpha, si, lhs, rhs};
                if (!verify_certificate(g, b, cert))
                    throw InternalInvariantBroken("extracted lower-bound witness failed recheck");
                if (picked) *picked = Certificate::Kind::Alpha;
                return cert;
            }
        }
        throw InternalInvariantBroken("no component of the minimizer violates the lower bounds");
    }

    // Upper-bound side: keep only edges meeting the constrained set, drop
    // cuts hit below their upper bound, and take the vertices whose cuts
    // remain saturated.
    EdgeSet trimmed(g.edge_count());
    x.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        if (b.constrained.contains(ed.u) || b.constrained.contains(ed.v)) trimmed.insert(e);
    });
    x = trimmed;
    auto c = counts_of(x);
    b.constrained.for_each([&](int v) {
        auto i = static_cast<std::size_t>(v);
        if (c[i] > 0 && c[i] < b.beta[i]) {
            strip(x, v);
            c[i] = 0;
        }
    });
    VertexSet s(n);
    b.constrained.for_each([&](int v) {
        auto i = static_cast<std::size_t>(v);
        if (c[i] >= b.beta[i]) s.insert(v);
    });
    Certificate cert{Certificate::Kind::Beta, s, beta_lhs(b, s), beta_rhs(g, s)};
    if (!verify_certificate(g, b, cert))
        throw InternalInvariantBroken("extracted upper-bound witness failed recheck");
    if (picked) *picked = Certificate::Kind::Beta;
    return cert;
}

Certificate map_welldefinedness_failure(const Graph& g, const DegreeBounds& b,
                                        const WellDefinednessFailure& f) {
    const int n = g.vertex_count();
    Certificate cert;
    switch (f.kind) {
        case WellDefinednessFailure::Kind::AlphaExceedsCapacity: {
            VertexSet s(n);
            s.insert(f.vertex);
            cert = Certificate{Certificate::Kind::Alpha, s, alpha_lhs(b, s), alpha_rhs(g, s)};
            break;
        }
        case WellDefinednessFailure::Kind::AlphaSumTooLarge: {
            const VertexSet& s = b.constrained;
            cert = Certificate{Certificate::Kind::Alpha, s, alpha_lhs(b, s), alpha_rhs(g, s)};
            break;
        }
        case WellDefinednessFailure::Kind::CapacityTooSmall: {
            VertexSet s(n);
            b.constrained.for_each([&](int v) {
                if (g.degree(v) >= b.beta[static_cast<std::size_t>(v)]) s.insert(v);
            });
            cert = Certificate{Certificate::Kind::Beta, s, beta_lhs(b, s), beta_rhs(g, s)};
            break;
        }
    }
    if (!verify_certificate(g, b, cert))
        throw InternalInvariantBroken("degree-bound failure mapping produced an invalid witness");
    return cert;
}

bool verify_certificate(const Graph& g, const DegreeBounds& b, const Certificate& c) {
    if (c.witness.universe_size() != g.vertex_count()) return false;
    bool subset = true;
    c.witness.for_each([&](int v) {
        if (!b.constrained.contains(v)) subset = false;
    });
    if (!subset) return false;
    if (c.violated == Certificate::Kind::Alpha) {
        if (c.witness.empty()) return false;
        long long lhs = alpha_lhs(b, c.witness);
        long long rhs = alpha_rhs(g, c.witness);
        return lhs == c.lhs && rhs == c.rhs && lhs > rhs;
    }
    long long lhs = beta_lhs(b, c.witness);
    long long rhs = beta_rhs(g, c.witness);
    return lhs == c.lhs && rhs == c.rhs && lhs < rhs;
}

}  // namespace dcst
