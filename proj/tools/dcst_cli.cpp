#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcst.h"

namespace {

struct InstanceHandle {
    dcst_instance* ptr = nullptr;
    ~InstanceHandle() { dcst_instance_free(ptr); }
};

struct ResultHandle {
    dcst_result* ptr = nullptr;
    ~ResultHandle() { dcst_result_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { dcst_string_free(ptr); }
};

int emit_malformed(const std::string& reason) {
    nlohmann::ordered_json j;
    j["status"] = "malformed";
    j["reason"] = reason;
    std::cout << j.dump() << "\n";
    return 1;
}

int emit_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string& out, std::string& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot open " + path;
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

// Parse failures become a malformed-result line (exit 1); other failures are
// process errors on stderr (exit 1). Returns 0 when parsing succeeded.
int load_instance(const std::string& path, InstanceHandle& inst) {
    std::string text;
    std::string err;
    if (!read_file(path, text, err)) return emit_malformed(err);
    dcst_status st = dcst_instance_parse(text.c_str(), &inst.ptr);
    if (st == DCST_ERR_PARSE) return emit_malformed(dcst_last_error());
    if (st != DCST_OK) return emit_error(dcst_last_error());
    return 0;
}

int print_result(const InstanceHandle& inst, const ResultHandle& res, const std::string& output) {
    if (output == "dot") {
        StringHandle dot;
        if (dcst_render_dot(inst.ptr, res.ptr, &dot.ptr) != DCST_OK)
            return emit_error(dcst_last_error());
        std::cout << dot.ptr;
    } else {
        StringHandle json;
        if (dcst_result_to_json(res.ptr, &json.ptr) != DCST_OK)
            return emit_error(dcst_last_error());
        std::cout << json.ptr << "\n";
    }
    return dcst_result_feasible(res.ptr) ? 0 : 2;
}

int run_solve(const std::string& path, bool certify, const std::string& output) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != 0) return rc;
    ResultHandle res;
    if (dcst_solve(inst.ptr, &res.ptr) != DCST_OK) return emit_error(dcst_last_error());
    if (certify) {
        StringHandle json;
        if (dcst_result_to_json(res.ptr, &json.ptr) != DCST_OK)
            return emit_error(dcst_last_error());
        StringHandle report;
        int passed = 0;
        if (dcst_verify(inst.ptr, json.ptr, &report.ptr, &passed) != DCST_OK)
            return emit_error(dcst_last_error());
        if (!passed)
            return emit_error(std::string("result failed self-verification: ") + report.ptr);
    }
    return print_result(inst, res, output);
}

int run_oracle(const std::string& path, int limit_enum, int limit_subset,
               const std::string& output) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != 0) return rc;
    ResultHandle res;
    if (dcst_oracle(inst.ptr, limit_enum, limit_subset, &res.ptr) != DCST_OK)
        return emit_error(dcst_last_error());
    return print_result(inst, res, output);
}

int run_check_conditions(const std::string& path, int limit_subset) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != 0) return rc;
    StringHandle report;
    if (dcst_check_conditions(inst.ptr, limit_subset, &report.ptr) != DCST_OK)
        return emit_error(dcst_last_error());
    std::cout << report.ptr << "\n";
    nlohmann::json parsed = nlohmann::json::parse(report.ptr);
    return parsed["status"] == "pass" ? 0 : 2;
}

int run_verify(const std::string& instance_path, const std::string& result_path) {
    InstanceHandle inst;
    if (int rc = load_instance(instance_path, inst); rc != 0) return rc;
    std::string result_text;
    std::string err;
    if (!read_file(result_path, result_text, err)) return emit_malformed(err);
    StringHandle report;
    int passed = 0;
    dcst_status st = dcst_verify(inst.ptr, result_text.c_str(), &report.ptr, &passed);
    if (st == DCST_ERR_PARSE) return emit_malformed(dcst_last_error());
    if (st != DCST_OK) return emit_error(dcst_last_error());
    std::cout << report.ptr << "\n";
    return passed ? 0 : 3;
}

int run_gen(const dcst_gen_params& params, const std::string& output) {
    StringHandle text;
    StringHandle note;
    if (dcst_generate(&params, &text.ptr, &note.ptr) != DCST_OK)
        return emit_error(dcst_last_error());
    if (note.ptr && note.ptr[0] != '\0') std::cerr << "note: " << note.ptr << "\n";
    if (output == "dot") {
        InstanceHandle inst;
        if (dcst_instance_parse(text.ptr, &inst.ptr) != DCST_OK)
            return emit_error(dcst_last_error());
        StringHandle dot;
        if (dcst_render_dot(inst.ptr, nullptr, &dot.ptr) != DCST_OK)
            return emit_error(dcst_last_error());
        std::cout << dot.ptr;
    } else {
        std::cout << text.ptr << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-constrained minimum spanning tree solver"};
    app.require_subcommand(1);

    int limit_subset = 20;
    int limit_enum = 8;
    std::string output = "json";
    app.add_option("--limit-subset", limit_subset,
                   "largest constrained-set size for exhaustive condition checks")
        ->capture_default_str();
    app.add_option("--limit-enum", limit_enum,
                   "largest vertex count for exhaustive tree enumeration")
        ->capture_default_str();
    app.add_option("--output", output, "output format for solve/oracle/gen")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();

    std::string solve_path;
    bool certify = false;
    CLI::App* solve_cmd = app.add_subcommand("solve", "minimum-cost tree or certificate");
    solve_cmd->add_option("instance", solve_path, "instance JSON file")->required();
    solve_cmd->add_flag("--certify", certify, "re-verify the result before printing");

    std::string check_path;
    CLI::App* check_cmd =
        app.add_subcommand("check-conditions", "exhaustively evaluate both feasibility conditions");
    check_cmd->add_option("instance", check_path, "instance JSON file")->required();

    std::string oracle_path;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "solve by exhaustive tree enumeration");
    oracle_cmd->add_option("instance", oracle_path, "instance JSON file")->required();

    std::string verify_instance_path;
    std::string verify_result_path;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a result against its instance");
    verify_cmd->add_option("instance", verify_instance_path, "instance JSON file")->required();
    verify_cmd->add_option("result", verify_result_path, "result JSON file")->required();

    int gen_n = 0;
    int gen_m = -1;
    double gen_prob = 0.0;
    int gen_stable = 0;
    int gen_alpha_max = 0;
    int gen_beta_max = 0;
    std::string weight_range = "1:10";
    std::uint64_t gen_seed = 0;
    bool gen_connected = false;
    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a deterministic random instance");
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    CLI::Option* m_opt = gen_cmd->add_option("--m", gen_m, "edge count");
    CLI::Option* prob_opt = gen_cmd->add_option("--edge-prob", gen_prob, "per-pair edge probability");
    m_opt->excludes(prob_opt);
    prob_opt->excludes(m_opt);
    gen_cmd->add_option("--stable-size", gen_stable, "constrained vertices to aim for");
    gen_cmd->add_option("--alpha-max", gen_alpha_max, "lower bounds drawn from [0, alpha-max]");
    gen_cmd->add_option("--beta-max", gen_beta_max, "upper bounds drawn from [alpha, beta-max]");
    gen_cmd->add_option("--weight-range", weight_range, "weights drawn from lo:hi inclusive")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
    gen_cmd->add_flag("--connected", gen_connected, "force a connected graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (solve_cmd->parsed()) return run_solve(solve_path, certify, output);
    if (check_cmd->parsed()) return run_check_conditions(check_path, limit_subset);
    if (oracle_cmd->parsed()) return run_oracle(oracle_path, limit_enum, limit_subset, output);
    if (verify_cmd->parsed()) return run_verify(verify_instance_path, verify_result_path);
    if (gen_cmd->parsed()) {
        if (m_opt->count() == 0 && prob_opt->count() == 0)
            return emit_error("gen needs exactly one of --m or --edge-prob");
        if (m_opt->count() > 0 && gen_m < 0) return emit_error("--m must be nonnegative");
        long long lo = 0;
        long long hi = 0;
        if (std::sscanf(weight_range.c_str(), "%lld:%lld", &lo, &hi) != 2)
            return emit_error("--weight-range expects lo:hi");
        dcst_gen_params params;
        params.n = gen_n;
        params.m = m_opt->count() > 0 ? gen_m : -1;
        params.edge_prob = gen_prob;
        params.stable_size = gen_stable;
        params.alpha_max = gen_alpha_max;
        params.beta_max = gen_beta_max;
        params.weight_lo = lo;
        params.weight_hi = hi;
        params.seed = gen_seed;
        params.connected = gen_connected ? 1 : 0;
        return run_gen(params, output);
    }
    return emit_error("no subcommand selected");
}
