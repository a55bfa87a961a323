#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "dcst/graph.hpp"
#include "dcst/index_set.hpp"

namespace dcst {

// Per-round exchange tester bound to one fixed independent set. can_insert(x)
// asks whether current + x stays independent; can_exchange(y, x) whether
// current - y + x does (y in current, x outside). A context is owned by a
// single search round and may cache freely.
class ExchangeContext {
public:
    virtual ~ExchangeContext() = default;
    virtual bool can_insert(int element) = 0;
    virtual bool can_exchange(int removed, int inserted) = 0;
};

class MatroidOracle {
public:
    virtual ~MatroidOracle() = default;
    virtual int ground_size() const = 0;
    virtual bool is_independent(const EdgeSet& x) const = 0;
    virtual int rank(const EdgeSet& x) const = 0;
    // Default answers through is_independent on a scratch copy; concrete
    // matroids override with incremental O(1) tests.
    virtual std::unique_ptr<ExchangeContext> exchange_context(const EdgeSet& current) const;
};

// Per-vertex degree bounds alpha[v] <= d(v) <= beta[v] on a stable vertex
// set. alpha/beta are dense arrays of size vertex_count; entries outside
// `constrained` are ignored.
struct DegreeBounds {
    VertexSet constrained;
    std::vector<int> alpha;
    std::vector<int> beta;
};

struct WellDefinednessFailure {
    enum class Kind { AlphaExceedsCapacity, AlphaSumTooLarge, CapacityTooSmall };
    Kind kind;
    int vertex;  // offending vertex for AlphaExceedsCapacity, else -1
    long long lhs;
    long long rhs;
};

// A(x) and B(x) of the closed-form rank min{A(x), B(x)} of the degree-bound
// matroid; exposed separately because certificate extraction branches on
// their comparison.
std::pair<long long, long long> partition_rank_terms(const Graph& g, const DegreeBounds& b,
                                                     const EdgeSet& x);

// Matroid whose bases are the (n-1)-edge subsets meeting every degree bound
// at the constrained vertices. Construct through make_m1, which decides
// whether any basis can exist at all.
class PartitionMatroidM1 final : public MatroidOracle {
public:
    int ground_size() const override { return g_->edge_count(); }
    bool is_independent(const EdgeSet& x) const override { return rank(x) == x.size(); }
    int rank(const EdgeSet& x) const override;
    std::unique_ptr<ExchangeContext> exchange_context(const EdgeSet& current) const override;

    const Graph& graph() const { return *g_; }
    const DegreeBounds& bounds() const { return bounds_; }

private:
    PartitionMatroidM1(const Graph& g, DegreeBounds bounds);
    friend std::variant<PartitionMatroidM1, WellDefinednessFailure> make_m1(const Graph&,
                                                                            const DegreeBounds&);

    const Graph* g_;  // non-owning; must outlive the matroid
    DegreeBounds bounds_;
    std::vector<int> edge_class_;  // constrained endpoint of each edge, -1 if none
};

// Cycle matroid: independent sets are the acyclic edge sets.
class GraphicMatroidM2 final : public MatroidOracle {
public:
    explicit GraphicMatroidM2(const Graph& g) : g_(&g) {}
    int ground_size() const override { return g_->edge_count(); }
    bool is_independent(const EdgeSet& x) const override;
    int rank(const EdgeSet& x) const override;
    std::unique_ptr<ExchangeContext> exchange_context(const EdgeSet& current) const override;

    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;  // non-owning; must outlive the matroid
};

// Requires bounds.constrained stable in g and alpha <= beta pointwise (both
// enforced). The returned failure is a structured verdict, not an error.
std::variant<PartitionMatroidM1, WellDefinednessFailure> make_m1(const Graph& g,
                                                                 const DegreeBounds& bounds);

}  // namespace dcst
