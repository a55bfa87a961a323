#include "dcst/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dcst/disjoint_set.hpp"

namespace dcst {

namespace {

class GenericExchangeContext final : public ExchangeContext {
public:
    GenericExchangeContext(const MatroidOracle& oracle, EdgeSet current)
        : oracle_(oracle), scratch_(std::move(current)) {}

    bool can_insert(int x) override {
        scratch_.insert(x);
        bool ok = oracle_.is_independent(scratch_);
        scratch_.erase(x);
        return ok;
    }

    bool can_exchange(int y, int x) override {
        scratch_.erase(y);
        scratch_.insert(x);
        bool ok = oracle_.is_independent(scratch_);
        scratch_.erase(x);
        scratch_.insert(y);
        return ok;
    }

private:
    const MatroidOracle& oracle_;
    EdgeSet scratch_;
};

long long positive_part(long long v) { return v > 0 ? v : 0; }

// Incremental tester for the degree-bound matroid. Independence of X is
// equivalent to: |X ∩ δ(v)| <= beta_v for every constrained v, and
// |X| + Σ_v max(alpha_v - |X ∩ δ(v)|, 0) <= n - 1. Since the constrained set
// is stable, each edge belongs to at most one per-vertex class, so both
// conditions update in O(1) per inserted/removed element.
class M1ExchangeContext final : public ExchangeContext {
public:
    M1ExchangeContext(const Graph& g, const DegreeBounds& b, const std::vector<int>& edge_class,
                      const EdgeSet& current)
        : bounds_(b), edge_class_(edge_class), counts_(static_cast<std::size_t>(g.vertex_count()), 0) {
        budget_ = g.vertex_count() - 1;
        size_ = current.size();
        current.for_each([&](int e) {
            int v = edge_class_[static_cast<std::size_t>(e)];
            if (v >= 0) ++counts_[static_cast<std::size_t>(v)];
        });
        deficiency_ = 0;
        bounds_.constrained.for_each([&](int v) {
            deficiency_ += positive_part(bounds_.alpha[static_cast<std::size_t>(v)] -
                                         counts_[static_cast<std::size_t>(v)]);
        });
    }

    bool can_insert(int x) override {
        long long def = deficiency_;
        int a = edge_class_[static_cast<std::size_t>(x)];
        if (a >= 0) {
            int c = counts_[static_cast<std::size_t>(a)];
            if (c + 1 > bounds_.beta[static_cast<std::size_t>(a)]) return false;
            def += positive_part(bounds_.alpha[static_cast<std::size_t>(a)] - (c + 1)) -
                   positive_part(bounds_.alpha[static_cast<std::size_t>(a)] - c);
        }
        return size_ + 1 + def <= budget_;
    }

    bool can_exchange(int y, int x) override {
        int a = edge_class_[static_cast<std::size_t>(x)];
        int b = edge_class_[static_cast<std::size_t>(y)];
        if (a == b) return true;  // class counts unchanged
        long long def = deficiency_;
        if (a >= 0) {
            int c = counts_[static_cast<std::size_t>(a)];
            if (c + 1 > bounds_.beta[static_cast<std::size_t>(a)]) return false;
            def += positive_part(bounds_.alpha[static_cast<std::size_t>(a)] - (c + 1)) -
                   positive_part(bounds_.alpha[static_cast<std::size_t>(a)] - c);
        }
        if (b >= 0) {
            int c = counts_[static_cast<std::size_t>(b)];
            def += positive_part(bounds_.alpha[static_cast<std::size_t>(b)] - (c - 1)) -
                   positive_part(bounds_.alpha[static_cast<std::size_t>(b)] - c);
        }
        return size_ + def <= budget_;
    }

private:
    const DegreeBounds& bounds_;
    const std::vector<int>& edge_class_;
    std::vector<int> counts_;
    long long deficiency_ = 0;
    long long budget_ = 0;
    int size_ = 0;
};

// Forest-based tester for the cycle matroid. All fundamental cycles of the
// current forest are materialized up front as bit rows so that exchange
// queries are O(1) in both argument orders.
class M2ExchangeContext final : public ExchangeContext {
public:
    M2ExchangeContext(const Graph& g, const EdgeSet& current) : m_(g.edge_count()) {
        const int n = g.vertex_count();
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        std::vector<int> parent_vertex(static_cast<std::size_t>(n), -1);
        std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
        std::vector<int> depth(static_cast<std::size_t>(n), 0);
        std::vector<int> stack;
        for (int root = 0; root < n; ++root) {
            if (comp[static_cast<std::size_t>(root)] != -1) continue;
            comp[static_cast<std::size_t>(root)] = root;
            stack.push_back(root);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [w, e] : g.adjacency(v)) {
                    if (!current.contains(e) || comp[static_cast<std::size_t>(w)] != -1) continue;
                    comp[static_cast<std::size_t>(w)] = root;
                    parent_vertex[static_cast<std::size_t>(w)] = v;
                    parent_edge[static_cast<std::size_t>(w)] = e;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                    stack.push_back(w);
                }
            }
        }

        insertable_.assign(static_cast<std::size_t>(m_), 0);
        words_ = (m_ + 63) / 64;
        cycle_bits_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(words_), 0);
        for (int e = 0; e < m_; ++e) {
            if (current.contains(e)) continue;
            int u = g.edge(e).u, v = g.edge(e).v;
            if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)]) {
                insertable_[static_cast<std::size_t>(e)] = 1;
                continue;
            }
            // walk the tree path between the endpoints, marking its edges
            int a = u, b = v;
            while (a != b) {
                if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
                mark(e, parent_edge[static_cast<std::size_t>(a)]);
                a = parent_vertex[static_cast<std::size_t>(a)];
            }
        }
    }

    bool can_insert(int x) override { return insertable_[static_cast<std::size_t>(x)] != 0; }

    bool can_exchange(int y, int x) override {
        if (insertable_[static_cast<std::size_t>(x)]) return true;
        const std::uint64_t* row = cycle_bits_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(words_);
        return (row[static_cast<std::size_t>(y >> 6)] >> (y & 63)) & 1u;
    }

private:
    void mark(int x, int y) {
        cycle_bits_[static_cast<std::size_t>(x) * static_cast<std::size_t>(words_) +
                    static_cast<std::size_t>(y >> 6)] |= std::uint64_t{1} << (y & 63);
    }

    int m_;
    int words_ = 0;
    std::vector<char> insertable_;
    std::vector<std::uint64_t> cycle_bits_;
};

}  // namespace

std::unique_ptr<ExchangeContext> MatroidOracle::exchange_context(const EdgeSet& current) const {
    return std::make_unique<GenericExchangeContext>(*this, current);
}

std::pair<long long, long long> partition_rank_terms(const Graph& g, const DegreeBounds& b,
                                                     const EdgeSet& x) {
    std::vector<int> counts(static_cast<std::size_t>(g.vertex_count()), 0);
    long long outside = 0;
    x.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        if (b.constrained.contains(ed.u))
            ++counts[static_cast<std::size_t>(ed.u)];
        else if (b.constrained.contains(ed.v))
            ++counts[static_cast<std::size_t>(ed.v)];
        else
            ++outside;
    });
    long long a = g.vertex_count() - 1;
    long long bb = outside;
    b.constrained.for_each([&](int v) {
        a -= positive_part(b.alpha[static_cast<std::size_t>(v)] - counts[static_cast<std::size_t>(v)]);
        bb += std::min<long long>(b.beta[static_cast<std::size_t>(v)], counts[static_cast<std::size_t>(v)]);
    });
    return {a, bb};
}

PartitionMatroidM1::PartitionMatroidM1(const Graph& g, DegreeBounds bounds)
    : g_(&g), bounds_(std::move(bounds)), edge_class_(static_cast<std::size_t>(g.edge_count()), -1) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (bounds_.constrained.contains(ed.u))
            edge_class_[static_cast<std::size_t>(e)] = ed.u;
        else if (bounds_.constrained.contains(ed.v))
            edge_class_[static_cast<std::size_t>(e)] = ed.v;
    }
}

int PartitionMatroidM1::rank(const EdgeSet& x) const {
    auto [a, b] = partition_rank_terms(*g_, bounds_, x);
    return static_cast<int>(std::min(a, b));
}

std::unique_ptr<ExchangeContext> PartitionMatroidM1::exchange_context(const EdgeSet& current) const {
    return std::make_unique<M1ExchangeContext>(*g_, bounds_, edge_class_, current);
}

bool GraphicMatroidM2::is_independent(const EdgeSet& x) const {
    DisjointSet ds(g_->vertex_count());
    bool acyclic = true;
    x.for_each([&](int e) {
        if (!ds.unite(g_->edge(e).u, g_->edge(e).v)) acyclic = false;
    });
    return acyclic;
}

int GraphicMatroidM2::rank(const EdgeSet& x) const {
    return g_->vertex_count() - component_count_spanning(*g_, x);
}

std::unique_ptr<ExchangeContext> GraphicMatroidM2::exchange_context(const EdgeSet& current) const {
    return std::make_unique<M2ExchangeContext>(*g_, current);
}

std::variant<PartitionMatroidM1, WellDefinednessFailure> make_m1(const Graph& g,
                                                                 const DegreeBounds& bounds) {
    if (!is_stable(g, bounds.constrained))
        throw std::invalid_argument("constrained vertex set must be stable");
    std::optional<WellDefinednessFailure> failure;
    long long alpha_sum = 0;
    long long capacity = 0;
    bounds.constrained.for_each([&](int v) {
        int alpha = bounds.alpha[static_cast<std::size_t>(v)];
        int beta = bounds.beta[static_cast<std::size_t>(v)];
        if (alpha > beta) throw std::invalid_argument("alpha must not exceed beta");
        if (failure) return;
        long long cap = std::min<long long>(beta, g.degree(v));
        if (alpha > cap) {
            failure = WellDefinednessFailure{WellDefinednessFailure::Kind::AlphaExceedsCapacity, v,
                                             alpha, cap};
            return;
        }
        alpha_sum += alpha;
        capacity += cap;
    });
    if (failure) return *failure;
    long long outside = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!bounds.constrained.contains(ed.u) && !bounds.constrained.contains(ed.v)) ++outside;
    }
    long long need = g.vertex_count() - 1;
    if (alpha_sum > need)
        return WellDefinednessFailure{WellDefinednessFailure::Kind::AlphaSumTooLarge, -1, alpha_sum,
                                      need};
    if (need > capacity + outside)
        return WellDefinednessFailure{WellDefinednessFailure::Kind::CapacityTooSmall, -1, need,
                                      capacity + outside};
    return PartitionMatroidM1(g, bounds);
}

}  // namespace dcst
