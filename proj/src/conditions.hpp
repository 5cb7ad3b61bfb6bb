#pragma once

#include "graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamfan {

/// Degree conditions known to force hamiltonicity or hamiltonian-connectedness.
enum class ConditionId {
    dirac,           ///< n >= 3, min degree >= n/2
    ore,             ///< n >= 3, d(x)+d(y) >= n over nonadjacent pairs
    fan_classic,     ///< 2-connected, max{d(x),d(y)} >= n/2 over distance-2 pairs
    mcdiarmid_yolov, ///< n >= 3, min degree >= alpha~
    zhou_et_al,      ///< n >= 3, min degree >= alpha~ + 1
    li_liu_ham,      ///< n >= 3, 2-connected, d(x)+d(y) >= 2 alpha~ over nonadjacent pairs
    li_liu_hc,       ///< n >= 3, 3-connected, d(x)+d(y) >= 2 alpha~ + 1 over nonadjacent pairs
    thm_ham,         ///< n >= 3, 2-connected, max{d(x),d(y)} >= alpha~ over distance-2 pairs
    thm_hc,          ///< 3-connected, max{d(x),d(y)} >= alpha~ + 1 over distance-2 pairs
};

inline constexpr ConditionId kAllConditions[] = {
    ConditionId::dirac,      ConditionId::ore,        ConditionId::fan_classic,
    ConditionId::mcdiarmid_yolov, ConditionId::zhou_et_al, ConditionId::li_liu_ham,
    ConditionId::li_liu_hc,  ConditionId::thm_ham,    ConditionId::thm_hc,
};

std::string_view condition_name(ConditionId id);
/// Throws Error(invalid_argument) on an unknown name.
ConditionId parse_condition_id(std::string_view name);

/// Outcome of one condition. `holds` covers the degree part only; order and
/// connectivity side conditions are reported separately so callers can tell
/// "degree bound met but not 3-connected" apart from a degree failure.
struct ConditionReport {
    std::string condition_id;
    bool holds = true;
    /// Set on failure of a pair-quantified condition.
    std::optional<Edge> violating_pair;
    /// Set on failure of a minimum-degree condition.
    std::optional<int> violating_vertex;
    /// Degree threshold compared against (per vertex, pair max, or pair sum).
    int bound_used = 0;

    int required_order = 0;
    bool order_ok = true;
    int required_connectivity = 0;
    bool connectivity_ok = true;

    bool all_hold() const { return holds && order_ok && connectivity_ok; }
};

/// Per-graph quantities shared by every condition.
struct GraphFacts {
    int alpha_tilde = 0;
    int connectivity = 0; ///< largest k <= 3 with is_k_connected(g, k)
};

GraphFacts compute_facts(const Graph& g);

/// Fan-type condition: max{d(x), d(y)} >= bound for every nonadjacent pair at
/// distance two. Vacuously true when there is no such pair.
ConditionReport fan_tilde_condition(const Graph& g, int bound);

bool theorem_ham_hypothesis(const Graph& g);
bool theorem_hc_hypothesis(const Graph& g);
bool theorem_ham_hypothesis(const Graph& g, const GraphFacts& facts);
bool theorem_hc_hypothesis(const Graph& g, const GraphFacts& facts);

ConditionReport evaluate_condition(const Graph& g, ConditionId id);
ConditionReport evaluate_condition(const Graph& g, ConditionId id, const GraphFacts& facts);
/// Name-based entry point; throws Error(invalid_argument) for unknown ids.
ConditionReport prior_condition(const Graph& g, std::string_view id);

/// Checks that a failed report carries a witness that really violates the
/// condition, and that a passing one carries none.
bool report_is_consistent(const Graph& g, const ConditionReport& report);

/// Vertices of degree >= alpha~ + 1.
VertexSet v_star(const Graph& g);
VertexSet v_star(const Graph& g, int alpha);

/// Fan-type condition at bound alpha~ + 1.
bool is_admissible(const Graph& g);
bool is_admissible(const Graph& g, int alpha);

bool induced_is_clique(const Graph& g, VertexSet s);

} // namespace hamfan
