#include "conditions.hpp"

#include "bipartite_hole.hpp"
#include "errors.hpp"

namespace hamfan {

namespace {

struct NameEntry {
    ConditionId id;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {ConditionId::dirac, "dirac"},
    {ConditionId::ore, "ore"},
    {ConditionId::fan_classic, "fan_classic"},
    {ConditionId::mcdiarmid_yolov, "mcdiarmid_yolov"},
    {ConditionId::zhou_et_al, "zhou_et_al"},
    {ConditionId::li_liu_ham, "li_liu_ham"},
    {ConditionId::li_liu_hc, "li_liu_hc"},
    {ConditionId::thm_ham, "thm-ham"},
    {ConditionId::thm_hc, "thm-hc"},
};

enum class PairScope { nonadjacent, distance_two };
enum class PairMeasure { max_degree, degree_sum };

// Returns the first violating pair (x < y, lexicographic) or nullopt.
// Thresholds are doubled so that n/2 bounds stay integral.
std::optional<Edge> first_pair_violation(const Graph& g, PairScope scope, PairMeasure measure,
                                         int twice_bound)
{
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y))
                continue;
            if (scope == PairScope::distance_two && !g.neighbors(x).intersects(g.neighbors(y)))
                continue;
            const int dx = g.degree(x);
            const int dy = g.degree(y);
            const int value = measure == PairMeasure::max_degree ? 2 * std::max(dx, dy) : 2 * (dx + dy);
            if (value < twice_bound)
                return Edge{x, y};
        }
    return std::nullopt;
}

std::optional<int> first_low_degree(const Graph& g, int twice_bound)
{
    for (int v = 0; v < g.order(); ++v)
        if (2 * g.degree(v) < twice_bound)
            return v;
    return std::nullopt;
}

ConditionReport pair_report(const Graph& g, ConditionId id, PairScope scope, PairMeasure measure,
                            int twice_bound)
{
    ConditionReport r;
    r.condition_id = std::string(condition_name(id));
    r.bound_used = (twice_bound + 1) / 2;
    r.violating_pair = first_pair_violation(g, scope, measure, twice_bound);
    r.holds = !r.violating_pair;
    return r;
}

ConditionReport degree_report(const Graph& g, ConditionId id, int twice_bound)
{
    ConditionReport r;
    r.condition_id = std::string(condition_name(id));
    r.bound_used = (twice_bound + 1) / 2;
    r.violating_vertex = first_low_degree(g, twice_bound);
    r.holds = !r.violating_vertex;
    return r;
}

void side_conditions(ConditionReport& r, const Graph& g, const GraphFacts& facts, int order, int conn)
{
    r.required_order = order;
    r.order_ok = g.order() >= order;
    r.required_connectivity = conn;
    r.connectivity_ok = facts.connectivity >= conn;
}

} // namespace

std::string_view condition_name(ConditionId id)
{
    for (const auto& entry : kNames)
        if (entry.id == id)
            return entry.name;
    return "unknown";
}

ConditionId parse_condition_id(std::string_view name)
{
    for (const auto& entry : kNames)
        if (entry.name == name)
            return entry.id;
    throw Error(Errc::invalid_argument, "unknown condition id '" + std::string(name) + "'");
}

GraphFacts compute_facts(const Graph& g)
{
    return GraphFacts{alpha_tilde_value(g), connectivity_up_to(g, 3)};
}

ConditionReport fan_tilde_condition(const Graph& g, int bound)
{
    ConditionReport r = pair_report(g, ConditionId::thm_ham, PairScope::distance_two,
                                    PairMeasure::max_degree, 2 * bound);
    r.condition_id = "fan_tilde";
    return r;
}

ConditionReport evaluate_condition(const Graph& g, ConditionId id, const GraphFacts& facts)
{
    const int n = g.order();
    const int alpha = facts.alpha_tilde;
    ConditionReport r;
    switch (id) {
    case ConditionId::dirac:
        r = degree_report(g, id, n);
        side_conditions(r, g, facts, 3, 0);
        break;
    case ConditionId::ore:
        r = pair_report(g, id, PairScope::nonadjacent, PairMeasure::degree_sum, 2 * n);
        side_conditions(r, g, facts, 3, 0);
        break;
    case ConditionId::fan_classic:
        r = pair_report(g, id, PairScope::distance_two, PairMeasure::max_degree, n);
        side_conditions(r, g, facts, 0, 2);
        break;
    case ConditionId::mcdiarmid_yolov:
        r = degree_report(g, id, 2 * alpha);
        side_conditions(r, g, facts, 3, 0);
        break;
    case ConditionId::zhou_et_al:
        r = degree_report(g, id, 2 * (alpha + 1));
        side_conditions(r, g, facts, 3, 0);
        break;
    case ConditionId::li_liu_ham:
        r = pair_report(g, id, PairScope::nonadjacent, PairMeasure::degree_sum, 2 * (2 * alpha));
        side_conditions(r, g, facts, 3, 2);
        break;
    case ConditionId::li_liu_hc:
        r = pair_report(g, id, PairScope::nonadjacent, PairMeasure::degree_sum, 2 * (2 * alpha + 1));
        side_conditions(r, g, facts, 3, 3);
        break;
    case ConditionId::thm_ham:
        r = pair_report(g, id, PairScope::distance_two, PairMeasure::max_degree, 2 * alpha);
        side_conditions(r, g, facts, 3, 2);
        break;
    case ConditionId::thm_hc:
        r = pair_report(g, id, PairScope::distance_two, PairMeasure::max_degree, 2 * (alpha + 1));
        side_conditions(r, g, facts, 0, 3);
        break;
    }
    return r;
}

ConditionReport evaluate_condition(const Graph& g, ConditionId id)
{
    return evaluate_condition(g, id, compute_facts(g));
}

ConditionReport prior_condition(const Graph& g, std::string_view id)
{
    return evaluate_condition(g, parse_condition_id(id));
}

bool theorem_ham_hypothesis(const Graph& g, const GraphFacts& facts)
{
    return g.order() >= 3 && facts.connectivity >= 2 && fan_tilde_condition(g, facts.alpha_tilde).holds;
}

bool theorem_hc_hypothesis(const Graph& g, const GraphFacts& facts)
{
    return facts.connectivity >= 3 && fan_tilde_condition(g, facts.alpha_tilde + 1).holds;
}

bool theorem_ham_hypothesis(const Graph& g)
{
    if (g.order() < 3 || !is_k_connected(g, 2))
        return false;
    return fan_tilde_condition(g, alpha_tilde_value(g)).holds;
}

bool theorem_hc_hypothesis(const Graph& g)
{
    if (!is_k_connected(g, 3))
        return false;
    return fan_tilde_condition(g, alpha_tilde_value(g) + 1).holds;
}

bool report_is_consistent(const Graph& g, const ConditionReport& r)
{
    if (r.holds)
        return !r.violating_pair && !r.violating_vertex;
    const int bound = r.bound_used;
    if (r.violating_vertex)
        return !r.violating_pair && g.degree(*r.violating_vertex) < bound;
    if (!r.violating_pair)
        return false;
    const auto [x, y] = *r.violating_pair;
    if (x == y || g.adjacent(x, y))
        return false;
    const int dx = g.degree(x);
    const int dy = g.degree(y);
    const bool distance_two_only = r.condition_id == "fan_classic" || r.condition_id == "thm-ham"
                                   || r.condition_id == "thm-hc" || r.condition_id == "fan_tilde";
    if (distance_two_only) {
        if (distance(g, x, y) != 2)
            return false;
        // n/2 thresholds compare on doubled values.
        if (r.condition_id == "fan_classic")
            return 2 * std::max(dx, dy) < g.order();
        return dx < bound && dy < bound;
    }
    if (r.condition_id == "ore")
        return dx + dy < g.order();
    return dx + dy < bound;
}

VertexSet v_star(const Graph& g, int alpha)
{
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= alpha + 1)
            out.insert(v);
    return out;
}

VertexSet v_star(const Graph& g)
{
    return v_star(g, alpha_tilde_value(g));
}

bool is_admissible(const Graph& g, int alpha)
{
    return fan_tilde_condition(g, alpha + 1).holds;
}

bool is_admissible(const Graph& g)
{
    return is_admissible(g, alpha_tilde_value(g));
}

bool induced_is_clique(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw Error(Errc::out_of_range, "vertex set outside the graph");
    for (int v : s)
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

} // namespace hamfan
