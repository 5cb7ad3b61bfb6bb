/* hamfan: bipartite independence number, Fan-type hamiltonicity conditions,
 * Hamilton cycle/path construction and small-graph verification.
 *
 * Graphs are opaque handles. Every call that can fail returns a status code;
 * on failure hamfan_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings handed out by the
 * library are NUL-terminated JSON (or graph6) and must be released with
 * hamfan_string_free(). Vertices are 0-based.
 */
#ifndef HAMFAN_H
#define HAMFAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HAMFAN_BUILDING)
#    define HAMFAN_API __declspec(dllexport)
#  else
#    define HAMFAN_API __declspec(dllimport)
#  endif
#else
#  define HAMFAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hamfan_status {
    HAMFAN_OK = 0,
    HAMFAN_ERR_PARSE,        /* malformed graph6 / edge list */
    HAMFAN_ERR_RANGE,        /* vertex or parameter out of range */
    HAMFAN_ERR_ARGUMENT,     /* unknown name, bad combination, null pointer */
    HAMFAN_ERR_PRECONDITION, /* rule or theorem precondition fails */
    HAMFAN_ERR_THRESHOLD,    /* a split threshold index does not exist */
    HAMFAN_ERR_TOO_LARGE,    /* input beyond an enumeration or solver limit */
    HAMFAN_ERR_IO,
    HAMFAN_ERR_INTERNAL
} hamfan_status;

typedef struct hamfan_graph hamfan_graph;

HAMFAN_API const char* hamfan_version(void);
HAMFAN_API const char* hamfan_status_name(hamfan_status status);
HAMFAN_API const char* hamfan_last_error(void);
HAMFAN_API void hamfan_string_free(char* s);

/* --- graphs ---------------------------------------------------------------- */

/* Edge list ("n m" header, then m lines "u v") when the first line holds two
 * integers, graph6 otherwise. */
HAMFAN_API hamfan_status hamfan_graph_parse(const char* text, hamfan_graph** out);
HAMFAN_API hamfan_status hamfan_graph_from_graph6(const char* text, hamfan_graph** out);
HAMFAN_API hamfan_status hamfan_graph_from_edge_list(const char* text, hamfan_graph** out);
/* `pairs` holds m (u, v) pairs, 2m ints. */
HAMFAN_API hamfan_status hamfan_graph_from_edges(int n, const int* pairs, size_t m, hamfan_graph** out);
HAMFAN_API void hamfan_graph_free(hamfan_graph* g);

HAMFAN_API int hamfan_graph_order(const hamfan_graph* g);
HAMFAN_API int hamfan_graph_size(const hamfan_graph* g);
HAMFAN_API int hamfan_graph_adjacent(const hamfan_graph* g, int u, int v);
HAMFAN_API hamfan_status hamfan_graph_to_graph6(const hamfan_graph* g, char** out);
HAMFAN_API hamfan_status hamfan_graph_to_edge_list(const hamfan_graph* g, char** out);

/* --- bipartite independence number ------------------------------------------ */

HAMFAN_API hamfan_status hamfan_alpha_tilde(const hamfan_graph* g, int* value);
/* {"value", "witness": {"s","t"}, "lower_bound_holes": [...]} */
HAMFAN_API hamfan_status hamfan_alpha_json(const hamfan_graph* g, char** out);
HAMFAN_API hamfan_status hamfan_connectivity(const hamfan_graph* g, int cap, int* value);

/* --- conditions ------------------------------------------------------------- */

/* `conditions` is a comma-separated list of ids (dirac, ore, fan_classic,
 * mcdiarmid_yolov, zhou_et_al, li_liu_ham, li_liu_hc, thm-ham, thm-hc,
 * admissible, v_star), or NULL/"" for all. `all_hold` (optional) receives 1
 * when every requested report holds including side conditions. */
HAMFAN_API hamfan_status hamfan_check_json(const hamfan_graph* g, const char* conditions, char** out, int* all_hold);
HAMFAN_API hamfan_status hamfan_theorem_ham_hypothesis(const hamfan_graph* g, int* holds);
HAMFAN_API hamfan_status hamfan_theorem_hc_hypothesis(const hamfan_graph* g, int* holds);

/* --- exact hamiltonicity ---------------------------------------------------- */

typedef enum hamfan_ham_mode {
    HAMFAN_HAM_CYCLE = 0,
    HAMFAN_HAM_PATH,     /* between x and y */
    HAMFAN_HAM_CONNECTED /* every pair */
} hamfan_ham_mode;

/* `found` (optional) receives 1 when the certificate exists / the graph is
 * hamiltonian-connected. */
HAMFAN_API hamfan_status hamfan_hamilton_json(const hamfan_graph* g, hamfan_ham_mode mode, int x, int y, char** out,
                                              int* found);

/* --- constructive drivers --------------------------------------------------- */

/* Hypothesis-checked. HAMFAN_HAM_CYCLE or HAMFAN_HAM_PATH (x, y). Output holds
 * the certificate and the full rewrite trace; `replayed` (optional) receives 1
 * when the trace re-executes to the same certificate. */
HAMFAN_API hamfan_status hamfan_construct_json(const hamfan_graph* g, hamfan_ham_mode mode, int x, int y, char** out,
                                               int* replayed);

/* --- rewrite rules ---------------------------------------------------------- */

/* Applies `rule` ("RT-A", ..., "HP-8", "CTL") to the sequence `seq` of length
 * `len`. `is_cycle` selects a cycle input (CTL only). `virtual_k` is the
 * 1-based virtual position for HP rules, 0 for none. */
HAMFAN_API hamfan_status hamfan_rewrite_json(const hamfan_graph* g, const char* rule, const int* seq, size_t len,
                                             int is_cycle, const int* witness, size_t witness_len, int virtual_k,
                                             char** out);
/* Every witness for which `rule` applies, as a JSON array. */
HAMFAN_API hamfan_status hamfan_witnesses_json(const hamfan_graph* g, const char* rule, const int* seq, size_t len,
                                               int is_cycle, int virtual_k, char** out);
/* Neighbour split for mode "sec2", "sec3_case1" or "sec3_case2" ("sec3" picks
 * the case), with its crossings and applicable witnesses. */
HAMFAN_API hamfan_status hamfan_split_json(const hamfan_graph* g, const char* mode, const int* seq, size_t len,
                                           int virtual_k, char** out);

/* --- extremal families ------------------------------------------------------ */

/* family: "g1", "g2" or "g3". */
HAMFAN_API hamfan_status hamfan_extremal_graph(const char* family, int parameter, hamfan_graph** out);
/* `all_pass` (optional) receives 1 when every family claim holds. */
HAMFAN_API hamfan_status hamfan_extremal_verify_json(const char* family, int parameter, char** out, int* all_pass);

/* --- corpus verification ---------------------------------------------------- */

typedef enum hamfan_source {
    HAMFAN_SOURCE_ALL_LABELED = 0, /* every labeled graph of order 1..order */
    HAMFAN_SOURCE_GRAPH6_FILE,     /* path */
    HAMFAN_SOURCE_GRAPH6_TEXT,     /* text, one graph per line */
    HAMFAN_SOURCE_RANDOM           /* count graphs G(order, edge_prob) from seed */
} hamfan_source;

typedef void (*hamfan_record_sink)(const char* record_json, void* user);

typedef struct hamfan_run_config {
    hamfan_source source;
    int order;
    const char* path;
    const char* text;
    uint64_t count;
    double edge_prob;
    uint64_t seed;
    int check_ham;
    int check_hc;
    int construct;
    int lemmas;
    int workers; /* HAMFAN_WORKERS in the environment overrides */
    /* Receives one JSON object per graph in index order; may be NULL. */
    hamfan_record_sink sink;
    void* sink_user;
} hamfan_run_config;

HAMFAN_API void hamfan_run_config_init(hamfan_run_config* cfg);
HAMFAN_API int hamfan_resolve_workers(const hamfan_run_config* cfg);

/* Summary object; `violated` (optional) receives 1 on a confirmed
 * counterexample, an invalid construction or a lemma violation. */
HAMFAN_API hamfan_status hamfan_verify_json(const hamfan_run_config* cfg, char** out, int* violated);
/* Hypothesis counts and prior-condition implications; `violated` receives 1
 * when an implication has an exception. */
HAMFAN_API hamfan_status hamfan_compare_json(const hamfan_run_config* cfg, char** out, int* violated);

#ifdef __cplusplus
}
#endif

#endif
