#pragma once

#include "bipartite_hole.hpp"
#include "graph.hpp"
#include "path.hpp"
#include "rewrite.hpp"

#include <map>
#include <string>
#include <vector>

namespace hamfan {

/// A failed check, with enough context to reproduce it.
struct LemmaViolation {
    std::string check;
    std::string graph6;
    std::vector<int> path;
    int k = 0; ///< virtual position for closing-path contexts, else 0
    std::string detail;
};

/// Tallies over checked contexts. `counts` holds named event counters such
/// as contexts seen, which crossing fired, and diagnostic near-misses.
struct LemmaStats {
    std::map<std::string, long long> counts;
    std::vector<LemmaViolation> violations;

    void merge(const LemmaStats& other);
    long long count(const std::string& key) const;
};

/// Endpoint context: path P in g with N(v_1), N(v_m) inside V(P), v_1 and
/// v_m nonadjacent, oriented so that d(v_1) <= d(v_m), and d(v_1) >= alpha~
/// >= 2. Checks, for the sec2 split with the given (s, t):
///   - the split exists and covers both endpoint neighbourhoods;
///   - every crossing yields a valid m-cycle via its RC rule;
///   - with no RC-0 crossing: |T1| <= t - 1 and |T2| = d(v_m) - |T1| >= s;
///   - some crossing exists (otherwise d(v_1) <= alpha~ - 1 would follow).
/// Returns false when the path is not such a context.
bool check_endpoint_context(const Graph& g, const OrientedPath& p, StSplit st, LemmaStats& stats);

/// Virtual-edge context: Hamilton path of g + v_k v_{k+1} carrying the
/// virtual position k, both ends of the virtual edge of degree >= alpha~+1 in
/// g, oriented so that d(v_{k+1}) >= d(v_k), alpha~ >= 2. Checks:
///   case 1: |T1 u R1| >= t implies an HP-1/HP-2 witness;
///           d(v_{k+1}) = |T1| + |R1| + |T2| + [v_1 ~ v_{k+1}] and, when the
///           bound holds, |T2| >= s;
///           |S2 u U2| >= t implies an HP-3/HP-4 witness;
///           d(v_k) = |S1| + |S2| + |U2|.
///   case 2: |S3| = d(v_k) - |S1| + 1;
///           |T3 u R3| >= t implies an HP-5/HP-6 witness;
///           d(v_{k+1}) = |T3| + |R3| + |T4|;
///           |S4 u U4| >= t implies an HP-7/HP-8 witness;
///           d(v_k) = |S4| + |U4| + s.
///   both:   some HP witness exists, and every found witness rewrites into a
///           valid Hamilton path of g with the same ends.
bool check_virtual_context(const Graph& g, const OrientedPath& p, StSplit st, LemmaStats& stats);

struct LemmaLimits {
    int endpoint_contexts_per_start = 2;
    int virtual_edges = 3;         ///< non-edges inside V* tried per graph
    int paths_per_virtual_edge = 6;
    long long search_nodes = 4000; ///< DFS node budget per start vertex
};

/// Runs both context families on g, which is expected to satisfy the
/// respective hypotheses (endpoint contexts: hamiltonicity hypothesis;
/// virtual contexts: hamiltonian-connectedness hypothesis). Contexts are
/// enumerated deterministically up to the given limits.
void check_endpoint_lemmas(const Graph& g, LemmaStats& stats, const LemmaLimits& limits = {});
void check_virtual_lemmas(const Graph& g, LemmaStats& stats, const LemmaLimits& limits = {});

} // namespace hamfan
