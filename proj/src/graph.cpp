#include "dcst/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dcst/disjoint_set.hpp"

namespace dcst {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        int u = edges_[i].u, v = edges_[i].v;
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
        if (u == v) throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw std::invalid_argument("parallel edges are not allowed");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        int u = edges_[i].u, v = edges_[i].v;
        adj_[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(i));
        adj_[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(i));
    }
}

EdgeSet edge_cut(const Graph& g, const VertexSet& s) {
    EdgeSet cut(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (s.contains(ed.u) != s.contains(ed.v)) cut.insert(e);
    }
    return cut;
}

VertexSet neighbors(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](int v) {
        for (const auto& [w, e] : g.adjacency(v)) {
            (void)e;
            if (!s.contains(w)) out.insert(w);
        }
    });
    return out;
}

int component_count_spanning(const Graph& g, const EdgeSet& x) {
    if (g.vertex_count() == 0) return 0;
    DisjointSet ds(g.vertex_count());
    x.for_each([&](int e) { ds.unite(g.edge(e).u, g.edge(e).v); });
    return ds.components();
}

int component_count_after_removal(const Graph& g, const VertexSet& s) {
    if (g.vertex_count() == 0) return 0;
    DisjointSet ds(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!s.contains(ed.u) && !s.contains(ed.v)) ds.unite(ed.u, ed.v);
    }
    // removed vertices stay singletons in ds, so drop them from the count
    return ds.components() - s.size();
}

bool is_stable(const Graph& g, const VertexSet& u) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (u.contains(ed.u) && u.contains(ed.v)) return false;
    }
    return true;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& x) {
    return x.size() == g.vertex_count() - 1 && component_count_spanning(g, x) == 1;
}

}  // namespace dcst
