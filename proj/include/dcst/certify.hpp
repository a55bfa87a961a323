#pragma once

#include <optional>
#include <vector>

#include "dcst/graph.hpp"
#include "dcst/index_set.hpp"
#include "dcst/matroid.hpp"

namespace dcst {

// Witness that one of the two feasibility conditions fails on the vertex
// set `witness`:
//   Alpha: sum of lower bounds over S exceeds |S| + |N(S)| - 1.
//   Beta:  sum of upper bounds over S falls short of w(G-S) + |S| - 1,
//          where w counts components after deleting S.
// lhs/rhs store both sides as evaluated on the instance.
struct Certificate {
    enum class Kind { Alpha, Beta };
    Kind violated = Kind::Alpha;
    VertexSet witness;
    long long lhs = 0;
    long long rhs = 0;
};

// Exhaustive checks over subsets S of the constrained set, in increasing
// cardinality then lexicographic order; the first violating S is returned.
// The alpha check skips S = {}; the beta check includes it (where it reduces
// to connectivity of the whole graph). Throws LimitExceeded when the
// constrained set is larger than subset_limit.
std::optional<Certificate> check_condition_alpha(const Graph& g, const DegreeBounds& b,
                                                 int subset_limit);
std::optional<Certificate> check_condition_beta(const Graph& g, const DegreeBounds& b,
                                                int subset_limit);

struct OracleVerdict {
    bool feasible = false;
    std::optional<EdgeSet> best_tree;
    std::optional<long long> best_cost;
    std::optional<Certificate> violating_set;
};

// Ground-truth solver: enumerates every spanning tree by edge
// include/exclude recursion with connectivity pruning, keeping the cheapest
// tree meeting all degree bounds (lexicographically smallest edge set among
// optima). Null weights mean all-zero. On infeasible instances the verdict
// carries a certificate found by the exhaustive condition checks. Throws
// LimitExceeded when n > vertex_limit.
OracleVerdict enumerate_feasible_trees(const Graph& g, const DegreeBounds& b,
                                       const std::vector<long long>* weights, int vertex_limit,
                                       int subset_limit);

// Converts a min-max minimizer x (with r1(x) + r2(E\x) <= n-2) into a
// violating set. Picks the alpha side when the partition-rank term A(x) is
// at most B(x), the beta side otherwise; `picked` reports the branch taken.
// The result is re-verified against raw definitions before return; failure
// throws InternalInvariantBroken.
Certificate extract_certificate(const Graph& g, const DegreeBounds& b, EdgeSet x,
                                Certificate::Kind* picked = nullptr);

// Converts a degree-bound well-definedness failure into a violating set.
// Re-verified before return like extract_certificate.
Certificate map_welldefinedness_failure(const Graph& g, const DegreeBounds& b,
                                        const WellDefinednessFailure& f);

// Recomputes lhs/rhs from scratch and confirms the claimed strict violation
// and the stored values.
bool verify_certificate(const Graph& g, const DegreeBounds& b, const Certificate& c);

}  // namespace dcst
