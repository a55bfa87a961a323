#include "dcst/intersection.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "dcst/errors.hpp"

namespace dcst {

namespace {

struct Label {
    __int128 cost = 0;
    long long arcs = 0;
    bool reached = false;
};

bool improves(__int128 cost, long long arcs, const Label& l) {
    return !l.reached || cost < l.cost || (cost == l.cost && arcs < l.arcs);
}

// Exchange-graph arcs for the current set I. For y in I and x outside:
//   y -> x  when I - y + x stays independent in the first matroid,
//   x -> y  when I - y + x stays independent in the second,
// plus source -> x when I + x is independent in the first and x -> sink when
// I + x is independent in the second. An augmenting source-sink path toggles
// membership of its element nodes and grows |I| by one.
IntersectionResult run(const MatroidOracle& m1, const MatroidOracle& m2,
                       const std::vector<long long>* weights, int target) {
    if (m1.ground_size() != m2.ground_size())
        throw std::invalid_argument("matroids must share one ground set");
    if (target < 0) throw std::invalid_argument("target size must be nonnegative");
    const int m = m1.ground_size();
    if (weights && static_cast<int>(weights->size()) != m)
        throw std::invalid_argument("weight count must match ground set size");

    EdgeSet common(m);
    long long total_cost = 0;
    std::vector<char> in_set(static_cast<std::size_t>(m), 0);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(m));
    std::vector<char> src_ok(static_cast<std::size_t>(m), 0);
    std::vector<char> snk_ok(static_cast<std::size_t>(m), 0);
    std::vector<char> reach(static_cast<std::size_t>(m), 0);

    // Element cost when it joins (+w) or leaves (-w) the common set.
    auto node_cost = [&](int v) -> __int128 {
        if (!weights) return 0;
        long long w = (*weights)[static_cast<std::size_t>(v)];
        return in_set[static_cast<std::size_t>(v)] ? -static_cast<__int128>(w)
                                                   : static_cast<__int128>(w);
    };

    const long long pop_cap = 64LL * (m + 2) * (m + 2) + 1024;

    bool stalled = false;
    while (common.size() < target) {
        auto ctx1 = m1.exchange_context(common);
        auto ctx2 = m2.exchange_context(common);

        for (int x = 0; x < m; ++x) {
            adj[static_cast<std::size_t>(x)].clear();
            radj[static_cast<std::size_t>(x)].clear();
            bool out = !in_set[static_cast<std::size_t>(x)];
            src_ok[static_cast<std::size_t>(x)] = out && ctx1->can_insert(x);
            snk_ok[static_cast<std::size_t>(x)] = out && ctx2->can_insert(x);
        }
        common.for_each([&](int y) {
            for (int x = 0; x < m; ++x) {
                if (in_set[static_cast<std::size_t>(x)]) continue;
                if (ctx1->can_exchange(y, x)) {
                    adj[static_cast<std::size_t>(y)].push_back(x);
                    radj[static_cast<std::size_t>(x)].push_back(y);
                }
                if (ctx2->can_exchange(y, x)) {
                    adj[static_cast<std::size_t>(x)].push_back(y);
                    radj[static_cast<std::size_t>(y)].push_back(x);
                }
            }
        });

        std::fill(reach.begin(), reach.end(), 0);
        std::vector<int> stack;
        for (int x = 0; x < m; ++x)
            if (src_ok[static_cast<std::size_t>(x)]) {
                reach[static_cast<std::size_t>(x)] = 1;
                stack.push_back(x);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!reach[static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        bool path_exists = false;
        for (int x = 0; x < m && !path_exists; ++x)
            path_exists = reach[static_cast<std::size_t>(x)] && snk_ok[static_cast<std::size_t>(x)];
        if (!path_exists) {
            stalled = true;
            break;
        }

        // Labels toward the sink: best (cost, arcs) of a v -> sink path,
        // cost counting every node strictly after v.
        std::vector<Label> label(static_cast<std::size_t>(m));
        std::deque<int> queue;
        std::vector<char> queued(static_cast<std::size_t>(m), 0);
        for (int x = 0; x < m; ++x)
            if (snk_ok[static_cast<std::size_t>(x)]) {
                label[static_cast<std::size_t>(x)] = {0, 1, true};
                queue.push_back(x);
                queued[static_cast<std::size_t>(x)] = 1;
            }
        long long pops = 0;
        while (!queue.empty()) {
            if (++pops > pop_cap)
                throw InternalInvariantBroken("augmenting-path labels failed to stabilize");
            int w = queue.front();
            queue.pop_front();
            queued[static_cast<std::size_t>(w)] = 0;
            __int128 through = label[static_cast<std::size_t>(w)].cost + node_cost(w);
            long long arcs = label[static_cast<std::size_t>(w)].arcs + 1;
            for (int v : radj[static_cast<std::size_t>(w)]) {
                if (improves(through, arcs, label[static_cast<std::size_t>(v)])) {
                    label[static_cast<std::size_t>(v)] = {through, arcs, true};
                    if (!queued[static_cast<std::size_t>(v)]) {
                        queue.push_back(v);
                        queued[static_cast<std::size_t>(v)] = 1;
                    }
                }
            }
        }

        Label best;
        for (int x = 0; x < m; ++x) {
            if (!src_ok[static_cast<std::size_t>(x)] || !label[static_cast<std::size_t>(x)].reached)
                continue;
            __int128 c = label[static_cast<std::size_t>(x)].cost + node_cost(x);
            long long a = label[static_cast<std::size_t>(x)].arcs + 1;
            if (improves(c, a, best)) best = {c, a, true};
        }
        if (!best.reached)
            throw InternalInvariantBroken("augmenting path reachable but labels missed it");

        // Walk forward, always taking the smallest element that still closes
        // the optimum exactly. Arc counts force termination, so element
        // choices and the sink never compete.
        std::vector<int> path;
        std::vector<int> first;
        for (int x = 0; x < m; ++x)
            if (src_ok[static_cast<std::size_t>(x)]) first.push_back(x);
        const std::vector<int>* cands = &first;
        __int128 acc = 0;
        long long used = 0;
        while (true) {
            int next = -1;
            for (int v : *cands) {
                const Label& l = label[static_cast<std::size_t>(v)];
                if (!l.reached) continue;
                if (acc + node_cost(v) + l.cost == best.cost && used + 1 + l.arcs == best.arcs) {
                    next = v;
                    break;
                }
            }
            if (next < 0) throw InternalInvariantBroken("augmenting path reconstruction failed");
            path.push_back(next);
            acc += node_cost(next);
            ++used;
            if (used + 1 == best.arcs) {
                if (!snk_ok[static_cast<std::size_t>(next)] || acc != best.cost)
                    throw InternalInvariantBroken("augmenting path reconstruction failed");
                break;
            }
            cands = &adj[static_cast<std::size_t>(next)];
        }

        int before = common.size();
        for (int v : path) {
            long long w = weights ? (*weights)[static_cast<std::size_t>(v)] : 0;
            if (in_set[static_cast<std::size_t>(v)]) {
                common.erase(v);
                in_set[static_cast<std::size_t>(v)] = 0;
                if (__builtin_sub_overflow(total_cost, w, &total_cost))
                    throw std::overflow_error("total weight overflows 64-bit range");
            } else {
                common.insert(v);
                in_set[static_cast<std::size_t>(v)] = 1;
                if (__builtin_add_overflow(total_cost, w, &total_cost))
                    throw std::overflow_error("total weight overflows 64-bit range");
            }
        }
        if (common.size() != before + 1 || !m1.is_independent(common) ||
            !m2.is_independent(common))
            throw InternalInvariantBroken("augmentation produced an invalid common set");
    }

    int size = common.size();
    if (!stalled) return {common, size, std::nullopt, total_cost};

    EdgeSet reached(m);
    for (int x = 0; x < m; ++x)
        if (reach[static_cast<std::size_t>(x)]) reached.insert(x);
    EdgeSet minimizer = reached.complement();
    if (m1.rank(minimizer) + m2.rank(minimizer.complement()) != size) {
        minimizer = reached;
        if (m1.rank(minimizer) + m2.rank(minimizer.complement()) != size)
            throw InternalInvariantBroken("min-max minimizer verification failed");
    }
    return {common, size, minimizer, total_cost};
}

}  // namespace

IntersectionResult max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2,
                                          int target) {
    return run(m1, m2, nullptr, target);
}

IntersectionResult min_weight_common_basis(const MatroidOracle& m1, const MatroidOracle& m2,
                                           const std::vector<long long>& weights, int target) {
    return run(m1, m2, &weights, target);
}

}  // namespace dcst
