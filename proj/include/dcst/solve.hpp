#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcst/certify.hpp"
#include "dcst/instance.hpp"

namespace dcst {

// Which reasoning produced the infeasibility witness; harnesses use this to
// confirm every certificate path gets exercised.
enum class CertificatePath { None, WellDefinedness, ExtractionAlpha, ExtractionBeta };

struct SolveOutcome {
    bool feasible = false;
    EdgeSet tree;  // meaningful when feasible
    long long cost = 0;
    std::optional<Certificate> certificate;  // present when infeasible
    CertificatePath path = CertificatePath::None;
};

// Full pipeline: degree-bound well-definedness check, then minimum-weight
// matroid intersection with target n-1; infeasibility always carries a
// verified certificate.
SolveOutcome solve(const Instance& inst);

// Ground-truth twin of solve() by spanning-tree enumeration (certificates
// from the exhaustive condition checks). Same LimitExceeded behavior as the
// underlying oracles.
SolveOutcome solve_by_enumeration(const Instance& inst, int vertex_limit, int subset_limit);

// Canonical result JSON (single line, no trailing newline):
//   {"status":"feasible","tree_edges":[...],"cost":..,"degrees":{"v":d,...}}
//   {"status":"infeasible","certificate":{"violated":..,"S":[...],"lhs":..,"rhs":..}}
std::string outcome_to_text(const Instance& inst, const SolveOutcome& out);

struct ConditionReport {
    std::optional<Certificate> alpha;  // empty = condition holds
    std::optional<Certificate> beta;
};

ConditionReport check_conditions(const Instance& inst, int subset_limit);

// {"status":"pass"|"violated","alpha":"pass"|{...},"beta":"pass"|{...}}
std::string condition_report_to_text(const ConditionReport& rep);

struct VerifyReport {
    bool passed = false;
    std::vector<std::pair<std::string, bool>> checks;
    std::string detail;  // first failure, empty when passed
};

// Re-validates a claimed result against the instance from raw definitions:
// feasible results via spanning-tree, degree-bound, and cost re-checks;
// infeasible results via certificate verification. Throws ParseError when
// result_text is not a well-formed result.
VerifyReport verify_result(const Instance& inst, const std::string& result_text);

// {"status":"pass"|"fail","checks":[{"check":..,"ok":..},...],"detail":..}
std::string verify_report_to_text(const VerifyReport& rep);

}  // namespace dcst
