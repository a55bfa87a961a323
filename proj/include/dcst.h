/* C interface to the degree-constrained spanning tree solver.
 *
 * All functions returning dcst_status leave a human-readable message for
 * the calling thread in dcst_last_error() on failure. Strings returned
 * through char** out-parameters are owned by the caller and must be
 * released with dcst_string_free(). Handles are released with their
 * matching *_free() function; every *_free accepts NULL.
 */
#ifndef DCST_H
#define DCST_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dcst_status {
    DCST_OK = 0,
    DCST_ERR_ARGUMENT = 1, /* bad pointer or parameter */
    DCST_ERR_PARSE = 2,    /* malformed instance or result text */
    DCST_ERR_LIMIT = 3,    /* exhaustive procedure over its configured bound */
    DCST_ERR_OVERFLOW = 4, /* cost arithmetic left the 64-bit range */
    DCST_ERR_INTERNAL = 5  /* broken solver invariant; indicates a bug */
} dcst_status;

typedef struct dcst_instance dcst_instance;
typedef struct dcst_result dcst_result;

const char* dcst_status_name(dcst_status status);

/* Message describing this thread's most recent failure; never NULL. */
const char* dcst_last_error(void);

void dcst_string_free(char* text);

/* Parses canonical instance JSON:
 *   {"n":4,"edges":[[0,1,1],...],"constrained":[{"v":0,"alpha":0,"beta":1}]}
 */
dcst_status dcst_instance_parse(const char* text, dcst_instance** out);
void dcst_instance_free(dcst_instance* instance);

/* Minimum-cost degree-constrained spanning tree, or a verified
 * infeasibility certificate. */
dcst_status dcst_solve(const dcst_instance* instance, dcst_result** out);

/* Ground-truth twin of dcst_solve by exhaustive enumeration; refuses
 * instances with more than vertex_limit vertices or more than subset_limit
 * constrained vertices (DCST_ERR_LIMIT). */
dcst_status dcst_oracle(const dcst_instance* instance, int vertex_limit, int subset_limit,
                        dcst_result** out);

int dcst_result_feasible(const dcst_result* result); /* 1 feasible, 0 infeasible */

/* Result JSON, single line:
 *   {"status":"feasible","tree_edges":[0,3,4],"cost":10,"degrees":{"0":1}}
 *   {"status":"infeasible","certificate":{"violated":"beta","S":[0],"lhs":1,"rhs":2}}
 */
dcst_status dcst_result_to_json(const dcst_result* result, char** out);
void dcst_result_free(dcst_result* result);

/* Exhaustive evaluation of both feasibility conditions over subsets of the
 * constrained set:
 *   {"status":"pass"|"violated","alpha":"pass"|{...},"beta":"pass"|{...}}
 */
dcst_status dcst_check_conditions(const dcst_instance* instance, int subset_limit,
                                  char** report_json);

/* Re-validates claimed result JSON against the instance from raw
 * definitions. *passed is 1 when every check holds. */
dcst_status dcst_verify(const dcst_instance* instance, const char* result_json,
                        char** report_json, int* passed);

/* Graphviz text; result may be NULL (no tree highlighted). */
dcst_status dcst_render_dot(const dcst_instance* instance, const dcst_result* result,
                            char** out);

typedef struct dcst_gen_params {
    int32_t n;
    int32_t m;          /* pair count, or -1 to use edge_prob */
    double edge_prob;   /* per-pair probability, used when m < 0 */
    int32_t stable_size;
    int32_t alpha_max;
    int32_t beta_max;
    int64_t weight_lo;
    int64_t weight_hi;
    uint64_t seed;
    int32_t connected;  /* nonzero forces connectivity */
} dcst_gen_params;

/* Deterministic random instance; identical params give identical bytes.
 * note receives a message when the request was met only partially (may be
 * an empty string), or NULL may be passed to skip it. */
dcst_status dcst_generate(const dcst_gen_params* params, char** instance_json, char** note);

#ifdef __cplusplus
}
#endif

#endif /* DCST_H */
