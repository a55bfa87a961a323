#pragma once

#include <utility>
#include <vector>

#include "dcst/index_set.hpp"

namespace dcst {

struct Edge {
    int u;
    int v;
};

// Simple undirected graph over vertices 0..n-1 with stable edge indices.
// Self-loops and parallel edges are rejected at construction; the structure
// is immutable afterwards.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    // (neighbor, edge index) pairs in insertion order.
    const std::vector<std::pair<int, int>>& adjacency(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Edges with exactly one endpoint in s.
EdgeSet edge_cut(const Graph& g, const VertexSet& s);

// Vertices outside s adjacent to at least one vertex of s.
VertexSet neighbors(const Graph& g, const VertexSet& s);

// Component count of (V(g), x); isolated vertices count as components.
int component_count_spanning(const Graph& g, const EdgeSet& x);

// Component count of the induced subgraph on V(g) \ s; 0 when s covers V(g).
int component_count_after_removal(const Graph& g, const VertexSet& s);

// True iff no edge of g has both endpoints in u.
bool is_stable(const Graph& g, const VertexSet& u);

bool is_spanning_tree(const Graph& g, const EdgeSet& x);

}  // namespace dcst
