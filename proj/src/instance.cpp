#include "dcst/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <tuple>

#include "json.hpp"

#include "dcst/errors.hpp"

namespace dcst {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr long long kMaxVertices = 1000000;

long long int_field(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw ParseError(where + ": exceeds the 64-bit signed range");
    return j.get<long long>();
}

long long ranged_int_field(const json& j, const std::string& where, long long lo, long long hi) {
    long long v = int_field(j, where);
    if (v < lo || v > hi)
        throw ParseError(where + ": must be between " + std::to_string(lo) + " and " +
                         std::to_string(hi));
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    for (const auto& item : j.items())
        if (item.key() != "n" && item.key() != "edges" && item.key() != "constrained")
            throw ParseError("top level: unknown field \"" + item.key() + "\"");

    if (!j.contains("n")) throw ParseError("n: missing");
    const int n = static_cast<int>(ranged_int_field(j["n"], "n", 1, kMaxVertices));

    if (!j.contains("edges")) throw ParseError("edges: missing");
    const json& je = j["edges"];
    if (!je.is_array()) throw ParseError("edges: expected an array");
    std::vector<Edge> edges;
    std::vector<long long> weights;
    edges.reserve(je.size());
    weights.reserve(je.size());
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& row = je[i];
        if (!row.is_array() || row.size() != 3) throw ParseError(where + ": expected [u, v, w]");
        int u = static_cast<int>(ranged_int_field(row[0], where + ".u", 0, n - 1));
        int v = static_cast<int>(ranged_int_field(row[1], where + ".v", 0, n - 1));
        long long w = int_field(row[2], where + ".w");
        if (u >= v) throw ParseError(where + ": endpoints must satisfy u < v");
        edges.push_back({u, v});
        weights.push_back(w);
    }
    {
        std::vector<std::tuple<int, int, std::size_t>> seen;
        seen.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            seen.emplace_back(edges[i].u, edges[i].v, i);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i)
            if (std::get<0>(seen[i]) == std::get<0>(seen[i - 1]) &&
                std::get<1>(seen[i]) == std::get<1>(seen[i - 1]))
                throw ParseError("edges[" + std::to_string(std::get<2>(seen[i])) +
                                 "]: duplicate of edges[" + std::to_string(std::get<2>(seen[i - 1])) +
                                 "]");
    }

    if (!j.contains("constrained")) throw ParseError("constrained: missing");
    const json& jc = j["constrained"];
    if (!jc.is_array()) throw ParseError("constrained: expected an array");
    DegreeBounds bounds{VertexSet(n), std::vector<int>(static_cast<std::size_t>(n), 0),
                        std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const std::string where = "constrained[" + std::to_string(i) + "]";
        const json& row = jc[i];
        if (!row.is_object()) throw ParseError(where + ": expected an object");
        for (const auto& item : row.items())
            if (item.key() != "v" && item.key() != "alpha" && item.key() != "beta")
                throw ParseError(where + ": unknown field \"" + item.key() + "\"");
        if (!row.contains("v")) throw ParseError(where + ".v: missing");
        if (!row.contains("alpha")) throw ParseError(where + ".alpha: missing");
        if (!row.contains("beta")) throw ParseError(where + ".beta: missing");
        int v = static_cast<int>(ranged_int_field(row["v"], where + ".v", 0, n - 1));
        int alpha = static_cast<int>(
            ranged_int_field(row["alpha"], where + ".alpha", 0, std::numeric_limits<int>::max()));
        int beta = static_cast<int>(
            ranged_int_field(row["beta"], where + ".beta", 0, std::numeric_limits<int>::max()));
        if (alpha > beta) throw ParseError(where + ": alpha exceeds beta");
        if (bounds.constrained.contains(v))
            throw ParseError(where + ".v: vertex " + std::to_string(v) + " listed twice");
        bounds.constrained.insert(v);
        bounds.alpha[static_cast<std::size_t>(v)] = alpha;
        bounds.beta[static_cast<std::size_t>(v)] = beta;
    }

    for (std::size_t e = 0; e < edges.size(); ++e)
        if (bounds.constrained.contains(edges[e].u) && bounds.constrained.contains(edges[e].v))
            throw ParseError("constrained: vertices " + std::to_string(edges[e].u) + " and " +
                             std::to_string(edges[e].v) + " are adjacent (edges[" +
                             std::to_string(e) + "]); the constrained set must be stable");

    return Instance{Graph(n, std::move(edges)), std::move(bounds), std::move(weights)};
}

std::string instance_to_text(const Instance& inst) {
    ordered_json out;
    out["n"] = inst.graph.vertex_count();
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        const Edge& ed = inst.graph.edge(e);
        edges.push_back({ed.u, ed.v, inst.weights[static_cast<std::size_t>(e)]});
    }
    out["edges"] = std::move(edges);
    ordered_json cons = ordered_json::array();
    inst.bounds.constrained.for_each([&](int v) {
        cons.push_back({{"v", v},
                        {"alpha", inst.bounds.alpha[static_cast<std::size_t>(v)]},
                        {"beta", inst.bounds.beta[static_cast<std::size_t>(v)]}});
    });
    out["constrained"] = std::move(cons);
    return out.dump();
}

}  // namespace dcst
