#include "dcst.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "dcst/dot.hpp"
#include "dcst/errors.hpp"
#include "dcst/generate.hpp"
#include "dcst/instance.hpp"
#include "dcst/solve.hpp"

struct dcst_instance {
    dcst::Instance value;
};

struct dcst_result {
    dcst::SolveOutcome outcome;
    std::string json;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dcst_status fail(dcst_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <class F>
dcst_status guarded(F&& body) {
    try {
        return body();
    } catch (const dcst::ParseError& e) {
        return fail(DCST_ERR_PARSE, e.what());
    } catch (const dcst::LimitExceeded& e) {
        return fail(DCST_ERR_LIMIT, e.what());
    } catch (const dcst::InternalInvariantBroken& e) {
        return fail(DCST_ERR_INTERNAL, e.what());
    } catch (const std::overflow_error& e) {
        return fail(DCST_ERR_OVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DCST_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(DCST_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* dcst_status_name(dcst_status status) {
    switch (status) {
        case DCST_OK: return "ok";
        case DCST_ERR_ARGUMENT: return "argument";
        case DCST_ERR_PARSE: return "parse";
        case DCST_ERR_LIMIT: return "limit";
        case DCST_ERR_OVERFLOW: return "overflow";
        case DCST_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* dcst_last_error(void) { return g_last_error.c_str(); }

void dcst_string_free(char* text) { std::free(text); }

dcst_status dcst_instance_parse(const char* text, dcst_instance** out) {
    if (!text || !out) return fail(DCST_ERR_ARGUMENT, "null argument to dcst_instance_parse");
    *out = nullptr;
    return guarded([&] {
        *out = new dcst_instance{dcst::parse_instance(text)};
        return DCST_OK;
    });
}

void dcst_instance_free(dcst_instance* instance) { delete instance; }

dcst_status dcst_solve(const dcst_instance* instance, dcst_result** out) {
    if (!instance || !out) return fail(DCST_ERR_ARGUMENT, "null argument to dcst_solve");
    *out = nullptr;
    return guarded([&] {
        dcst::SolveOutcome outcome = dcst::solve(instance->value);
        std::string json = dcst::outcome_to_text(instance->value, outcome);
        *out = new dcst_result{std::move(outcome), std::move(json)};
        return DCST_OK;
    });
}

dcst_status dcst_oracle(const dcst_instance* instance, int vertex_limit, int subset_limit,
                        dcst_result** out) {
    if (!instance || !out) return fail(DCST_ERR_ARGUMENT, "null argument to dcst_oracle");
    *out = nullptr;
    return guarded([&] {
        dcst::SolveOutcome outcome =
            dcst::solve_by_enumeration(instance->value, vertex_limit, subset_limit);
        std::string json = dcst::outcome_to_text(instance->value, outcome);
        *out = new dcst_result{std::move(outcome), std::move(json)};
        return DCST_OK;
    });
}

int dcst_result_feasible(const dcst_result* result) {
    return result && result->outcome.feasible ? 1 : 0;
}

dcst_status dcst_result_to_json(const dcst_result* result, char** out) {
    if (!result || !out) return fail(DCST_ERR_ARGUMENT, "null argument to dcst_result_to_json");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(result->json);
        return DCST_OK;
    });
}

void dcst_result_free(dcst_result* result) { delete result; }

dcst_status dcst_check_conditions(const dcst_instance* instance, int subset_limit,
                                  char** report_json) {
    if (!instance || !report_json)
        return fail(DCST_ERR_ARGUMENT, "null argument to dcst_check_conditions");
    *report_json = nullptr;
    return guarded([&] {
        dcst::ConditionReport rep = dcst::check_conditions(instance->value, subset_limit);
        *report_json = dup_string(dcst::condition_report_to_text(rep));
        return DCST_OK;
    });
}

dcst_status dcst_verify(const dcst_instance* instance, const char* result_json,
                        char** report_json, int* passed) {
    if (!instance || !result_json || !report_json || !passed)
        return fail(DCST_ERR_ARGUMENT, "null argument to dcst_verify");
    *report_json = nullptr;
    *passed = 0;
    return guarded([&] {
        dcst::VerifyReport rep = dcst::verify_result(instance->value, result_json);
        *report_json = dup_string(dcst::verify_report_to_text(rep));
        *passed = rep.passed ? 1 : 0;
        return DCST_OK;
    });
}

dcst_status dcst_render_dot(const dcst_instance* instance, const dcst_result* result,
                            char** out) {
    if (!instance || !out) return fail(DCST_ERR_ARGUMENT, "null argument to dcst_render_dot");
    *out = nullptr;
    return guarded([&] {
        const dcst::EdgeSet* tree = nullptr;
        if (result && result->outcome.feasible) tree = &result->outcome.tree;
        *out = dup_string(dcst::render_dot(instance->value, tree));
        return DCST_OK;
    });
}

dcst_status dcst_generate(const dcst_gen_params* params, char** instance_json, char** note) {
    if (!params || !instance_json)
        return fail(DCST_ERR_ARGUMENT, "null argument to dcst_generate");
    *instance_json = nullptr;
    if (note) *note = nullptr;
    return guarded([&] {
        dcst::GenParams p;
        p.n = params->n;
        if (params->m >= 0)
            p.m = params->m;
        else
            p.edge_prob = params->edge_prob;
        p.stable_size = params->stable_size;
        p.alpha_max = params->alpha_max;
        p.beta_max = params->beta_max;
        p.weight_lo = params->weight_lo;
        p.weight_hi = params->weight_hi;
        p.seed = params->seed;
        p.connected = params->connected != 0;
        dcst::GenResult res = dcst::generate_instance(p);
        char* text = dup_string(res.instance_text);
        if (note) {
            try {
                *note = dup_string(res.note);
            } catch (...) {
                std::free(text);
                throw;
            }
        }
        *instance_json = text;
        return DCST_OK;
    });
}

}  // extern "C"
