#include "dcst/solve.hpp"

#include <cstdint>
#include <limits>
#include <variant>

#include "json.hpp"

#include "dcst/errors.hpp"
#include "dcst/intersection.hpp"

namespace dcst {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int tree_degree(const Graph& g, const EdgeSet& tree, int v) {
    int d = 0;
    for (const auto& [w, e] : g.adjacency(v)) {
        (void)w;
        if (tree.contains(e)) ++d;
    }
    return d;
}

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json out;
    out["violated"] = c.violated == Certificate::Kind::Alpha ? "alpha" : "beta";
    out["S"] = c.witness.members();
    out["lhs"] = c.lhs;
    out["rhs"] = c.rhs;
    return out;
}

}  // namespace

SolveOutcome solve(const Instance& inst) {
    const Graph& g = inst.graph;
    SolveOutcome out;
    out.tree = EdgeSet(g.edge_count());

    auto made = make_m1(g, inst.bounds);
    if (const auto* failure = std::get_if<WellDefinednessFailure>(&made)) {
        out.certificate = map_welldefinedness_failure(g, inst.bounds, *failure);
        out.path = CertificatePath::WellDefinedness;
        return out;
    }

    const int target = g.vertex_count() - 1;
    if (target == 0) {
        out.feasible = true;
        return out;
    }

    const PartitionMatroidM1& m1 = std::get<PartitionMatroidM1>(made);
    GraphicMatroidM2 m2(g);
    IntersectionResult res = min_weight_common_basis(m1, m2, inst.weights, target);

    if (res.size == target) {
        if (!is_spanning_tree(g, res.common))
            throw InternalInvariantBroken("full-size common set is not a spanning tree");
        bool bounds_ok = true;
        inst.bounds.constrained.for_each([&](int v) {
            int d = tree_degree(g, res.common, v);
            auto i = static_cast<std::size_t>(v);
            if (d < inst.bounds.alpha[i] || d > inst.bounds.beta[i]) bounds_ok = false;
        });
        if (!bounds_ok)
            throw InternalInvariantBroken("returned tree breaks a degree bound");
        out.feasible = true;
        out.tree = res.common;
        out.cost = res.cost;
        return out;
    }

    if (!res.minimizer)
        throw InternalInvariantBroken("target missed without a minimizer to certify it");
    Certificate::Kind picked = Certificate::Kind::Alpha;
    out.certificate = extract_certificate(g, inst.bounds, *res.minimizer, &picked);
    out.path = picked == Certificate::Kind::Alpha ? CertificatePath::ExtractionAlpha
                                                  : CertificatePath::ExtractionBeta;
    return out;
}

SolveOutcome solve_by_enumeration(const Instance& inst, int vertex_limit, int subset_limit) {
    OracleVerdict verdict = enumerate_feasible_trees(inst.graph, inst.bounds, &inst.weights,
                                                     vertex_limit, subset_limit);
    SolveOutcome out;
    out.tree = EdgeSet(inst.graph.edge_count());
    if (verdict.feasible) {
        out.feasible = true;
        out.tree = *verdict.best_tree;
        out.cost = *verdict.best_cost;
    } else {
        out.certificate = verdict.violating_set;
    }
    return out;
}

std::string outcome_to_text(const Instance& inst, const SolveOutcome& out) {
    ordered_json j;
    if (out.feasible) {
        j["status"] = "feasible";
        j["tree_edges"] = out.tree.members();
        j["cost"] = out.cost;
        ordered_json degrees = ordered_json::object();
        inst.bounds.constrained.for_each([&](int v) {
            degrees[std::to_string(v)] = tree_degree(inst.graph, out.tree, v);
        });
        j["degrees"] = std::move(degrees);
    } else {
        if (!out.certificate)
            throw InternalInvariantBroken("infeasible outcome without a certificate");
        j["status"] = "infeasible";
        j["certificate"] = certificate_to_json(*out.certificate);
    }
    return j.dump();
}

ConditionReport check_conditions(const Instance& inst, int subset_limit) {
    ConditionReport rep;
    rep.alpha = check_condition_alpha(inst.graph, inst.bounds, subset_limit);
    rep.beta = check_condition_beta(inst.graph, inst.bounds, subset_limit);
    return rep;
}

std::string condition_report_to_text(const ConditionReport& rep) {
    ordered_json j;
    j["status"] = (rep.alpha || rep.beta) ? "violated" : "pass";
    j["alpha"] = rep.alpha ? ordered_json(certificate_to_json(*rep.alpha)) : ordered_json("pass");
    j["beta"] = rep.beta ? ordered_json(certificate_to_json(*rep.beta)) : ordered_json("pass");
    return j.dump();
}

namespace {

long long result_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw ParseError(where + ": exceeds the 64-bit signed range");
    return j.get<long long>();
}

void record(VerifyReport& rep, const std::string& name, bool ok, const std::string& why) {
    rep.checks.emplace_back(name, ok);
    if (!ok && rep.detail.empty()) rep.detail = why;
}

}  // namespace

VerifyReport verify_result(const Instance& inst, const std::string& result_text) {
    json j;
    try {
        j = json::parse(result_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("result: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("status") || !j["status"].is_string())
        throw ParseError("result: expected an object with a string \"status\"");
    const std::string status = j["status"].get<std::string>();
    const Graph& g = inst.graph;
    VerifyReport rep;

    if (status == "feasible") {
        if (!j.contains("tree_edges") || !j["tree_edges"].is_array())
            throw ParseError("result.tree_edges: expected an array");
        if (!j.contains("cost")) throw ParseError("result.cost: missing");
        EdgeSet tree(g.edge_count());
        for (std::size_t i = 0; i < j["tree_edges"].size(); ++i) {
            long long e = result_int(j["tree_edges"][i], "result.tree_edges[" + std::to_string(i) + "]");
            if (e < 0 || e >= g.edge_count())
                throw ParseError("result.tree_edges[" + std::to_string(i) + "]: no such edge");
            tree.insert(static_cast<int>(e));
        }
        long long claimed_cost = result_int(j["cost"], "result.cost");

        bool spanning = is_spanning_tree(g, tree);
        record(rep, "tree-is-spanning", spanning,
               "claimed edge set is not a spanning tree");

        bool bounds_ok = true;
        std::string bound_why;
        inst.bounds.constrained.for_each([&](int v) {
            int d = tree_degree(g, tree, v);
            auto i = static_cast<std::size_t>(v);
            if (d < inst.bounds.alpha[i] || d > inst.bounds.beta[i]) {
                if (bounds_ok)
                    bound_why = "vertex " + std::to_string(v) + " has tree degree " +
                                std::to_string(d) + ", outside [" +
                                std::to_string(inst.bounds.alpha[i]) + ", " +
                                std::to_string(inst.bounds.beta[i]) + "]";
                bounds_ok = false;
            }
        });
        record(rep, "degree-bounds", bounds_ok, bound_why);

        __int128 actual_cost = 0;
        tree.for_each([&](int e) { actual_cost += inst.weights[static_cast<std::size_t>(e)]; });
        bool cost_ok = actual_cost == static_cast<__int128>(claimed_cost);
        record(rep, "cost-matches", cost_ok,
               "cost mismatch: claimed " + std::to_string(claimed_cost) + ", recomputed " +
                   std::to_string(static_cast<long long>(actual_cost)));

        if (j.contains("degrees")) {
            if (!j["degrees"].is_object()) throw ParseError("result.degrees: expected an object");
            bool deg_ok = true;
            std::string deg_why;
            int listed = static_cast<int>(j["degrees"].size());
            if (listed != inst.bounds.constrained.size()) {
                deg_ok = false;
                deg_why = "degrees lists " + std::to_string(listed) + " vertices, expected " +
                          std::to_string(inst.bounds.constrained.size());
            }
            inst.bounds.constrained.for_each([&](int v) {
                if (!deg_ok && !deg_why.empty()) return;
                std::string key = std::to_string(v);
                if (!j["degrees"].contains(key)) {
                    deg_ok = false;
                    deg_why = "degrees is missing vertex " + key;
                    return;
                }
                long long claimed = result_int(j["degrees"][key], "result.degrees." + key);
                int actual = tree_degree(g, tree, v);
                if (claimed != actual) {
                    deg_ok = false;
                    deg_why = "degrees[" + key + "] is " + std::to_string(claimed) +
                              ", recomputed " + std::to_string(actual);
                }
            });
            record(rep, "degrees-match", deg_ok, deg_why);
        }
    } else if (status == "infeasible") {
        if (!j.contains("certificate") || !j["certificate"].is_object())
            throw ParseError("result.certificate: expected an object");
        const json& jc = j["certificate"];
        if (!jc.contains("violated") || !jc["violated"].is_string())
            throw ParseError("result.certificate.violated: expected \"alpha\" or \"beta\"");
        const std::string kind = jc["violated"].get<std::string>();
        if (kind != "alpha" && kind != "beta")
            throw ParseError("result.certificate.violated: expected \"alpha\" or \"beta\"");
        if (!jc.contains("S") || !jc["S"].is_array())
            throw ParseError("result.certificate.S: expected an array");
        Certificate cert;
        cert.violated = kind == "alpha" ? Certificate::Kind::Alpha : Certificate::Kind::Beta;
        cert.witness = VertexSet(g.vertex_count());
        for (std::size_t i = 0; i < jc["S"].size(); ++i) {
            long long v = result_int(jc["S"][i], "result.certificate.S[" + std::to_string(i) + "]");
            if (v < 0 || v >= g.vertex_count())
                throw ParseError("result.certificate.S[" + std::to_string(i) + "]: no such vertex");
            cert.witness.insert(static_cast<int>(v));
        }
        if (!jc.contains("lhs")) throw ParseError("result.certificate.lhs: missing");
        if (!jc.contains("rhs")) throw ParseError("result.certificate.rhs: missing");
        cert.lhs = result_int(jc["lhs"], "result.certificate.lhs");
        cert.rhs = result_int(jc["rhs"], "result.certificate.rhs");
        record(rep, "certificate-valid", verify_certificate(g, inst.bounds, cert),
               "certificate failed re-verification from raw definitions");
    } else if (status == "malformed") {
        throw ParseError("result has status \"malformed\"; nothing to verify");
    } else {
        throw ParseError("result.status: unknown value \"" + status + "\"");
    }

    rep.passed = true;
    for (const auto& [name, ok] : rep.checks) {
        (void)name;
        if (!ok) rep.passed = false;
    }
    return rep;
}

std::string verify_report_to_text(const VerifyReport& rep) {
    ordered_json j;
    j["status"] = rep.passed ? "pass" : "fail";
    ordered_json checks = ordered_json::array();
    for (const auto& [name, ok] : rep.checks) checks.push_back({{"check", name}, {"ok", ok}});
    j["checks"] = std::move(checks);
    if (!rep.passed) j["detail"] = rep.detail;
    return j.dump();
}

}  // namespace dcst
