#include "lemmas.hpp"

#include "conditions.hpp"
#include "errors.hpp"

#include <algorithm>
#include <functional>

namespace hamfan {

void LemmaStats::merge(const LemmaStats& other)
{
    for (const auto& [key, value] : other.counts)
        counts[key] += value;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

long long LemmaStats::count(const std::string& key) const
{
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

namespace {

std::vector<int> to_vector(std::span<const int> s)
{
    return {s.begin(), s.end()};
}

void violate(LemmaStats& stats, const Graph& g, const OrientedPath& p, std::string check, std::string detail)
{
    ++stats.counts["violation." + check];
    stats.violations.push_back(
        LemmaViolation{std::move(check), emit_graph6(g), to_vector(p.vertices()), p.virtual_position().value_or(0),
                       std::move(detail)});
}

std::string counts_detail(std::initializer_list<std::pair<const char*, int>> items)
{
    std::string out;
    for (const auto& [name, value] : items) {
        if (!out.empty())
            out += ", ";
        out += std::string(name) + "=" + std::to_string(value);
    }
    return out;
}

bool any_rule(const std::vector<RewriteRule>& rules, RuleId a, RuleId b)
{
    return std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& r) { return r.id == a || r.id == b; });
}

} // namespace

bool check_endpoint_context(const Graph& g, const OrientedPath& p, StSplit st, LemmaStats& stats)
{
    const int alpha = st.s + st.t - 1;
    const int m = p.size();
    if (alpha < 2 || m < 3 || p.virtual_position() || path_defect(g, p))
        return false;
    const int v1 = p.front();
    const int vm = p.back();
    const VertexSet on = p.vertex_set();
    if (g.adjacent(v1, vm) || !g.neighbors(v1).is_subset_of(on) || !g.neighbors(vm).is_subset_of(on))
        return false;
    if (g.degree(v1) > g.degree(vm) || g.degree(v1) < alpha)
        return false;
    ++stats.counts["sec2.contexts"];

    NeighborSplit split;
    try {
        split = compute_neighbor_split(g, p, SplitMode::sec2, st);
    } catch (const Error& e) {
        violate(stats, g, p, "sec2.k_exists", e.what());
        return true;
    }
    if (!split.endpoints_covered)
        violate(stats, g, p, "sec2.cover", "N(v1) != S1 u S2 or N(vm) != T1 u T2");

    const auto crossings = split_crossings(g, p, split);
    for (const auto& rule : crossings) {
        if (auto bad = rewrite_defect(g, p, rule)) {
            violate(stats, g, p, "sec2.crossing_rule", *bad);
            continue;
        }
        const RewriteResult out = apply_rewrite(g, p, rule);
        const Cycle* c = std::get_if<Cycle>(&out);
        if (!c || c->size() != m || c->vertex_set() != on || cycle_defect(g, *c))
            violate(stats, g, p, "sec2.crossing_output", std::string(rule_name(rule.id)));
        else
            ++stats.counts["sec2.fired." + std::string(rule_name(rule.id))];
    }

    const int t1 = split.get("T1").size();
    const int t2 = split.get("T2").size();
    const bool eq1_empty = !any_rule(crossings, RuleId::rc_0, RuleId::rc_0);
    const bool eq3_empty = !any_rule(crossings, RuleId::rc_1, RuleId::rc_2);
    if (eq1_empty) {
        ++stats.counts["sec2.eq1_empty"];
        if (t1 > st.t - 1)
            violate(stats, g, p, "sec2.eq2_T1", counts_detail({{"|T1|", t1}, {"t", st.t}}));
        if (t2 != g.degree(vm) - t1 || t2 < st.s)
            violate(stats, g, p, "sec2.eq2_T2",
                    counts_detail({{"|T2|", t2}, {"d(vm)", g.degree(vm)}, {"|T1|", t1}, {"s", st.s}}));
    }
    if (eq3_empty)
        ++stats.counts["sec2.eq3_empty"];
    if (eq1_empty && eq3_empty)
        violate(stats, g, p, "sec2.no_crossing",
                counts_detail({{"d(v1)", g.degree(v1)}, {"|S2|", split.get("S2").size()}, {"alpha", alpha}}));
    return true;
}

bool check_virtual_context(const Graph& g, const OrientedPath& p, StSplit st, LemmaStats& stats)
{
    const int alpha = st.s + st.t - 1;
    const int n = g.order();
    if (alpha < 2 || !p.virtual_position() || p.size() != n || path_defect(g, p))
        return false;
    const int k = *p.virtual_position();
    const int vk = p.at(k);
    const int vk1 = p.at(k + 1);
    const int dk = g.degree(vk);
    const int dk1 = g.degree(vk1);
    if (dk < alpha + 1 || dk1 < dk)
        return false;
    ++stats.counts["sec3.contexts"];

    NeighborSplit split;
    try {
        split = compute_sec3_split(g, p, st, true);
    } catch (const Error& e) {
        violate(stats, g, p, "sec3.threshold", e.what());
        return true;
    }
    const bool case1 = split.mode == SplitMode::sec3_case1;
    ++stats.counts[case1 ? "sec3.case1" : "sec3.case2"];

    const auto crossings = split_crossings(g, p, split);
    std::vector<RewriteRule> witnesses;
    for (const auto& rule : crossings) {
        if (auto bad = rewrite_defect(g, p, rule)) {
            // The crossing edge is there but the displayed construction does
            // not apply (e.g. coinciding indices).
            ++stats.counts["sec3.crossing_not_applicable." + std::string(rule_name(rule.id))];
            continue;
        }
        witnesses.push_back(rule);
        const OrientedPath out = std::get<OrientedPath>(apply_rewrite(g, p, rule));
        if (out.size() != n || out.front() != p.front() || out.back() != p.back() || out.virtual_position()
            || path_defect(g, out))
            violate(stats, g, p, "sec3.rewrite_output", std::string(rule_name(rule.id)));
        else
            ++stats.counts["sec3.fired." + std::string(rule_name(rule.id))];
    }

    auto size = [&](const char* name) { return split.get(name).size(); };
    auto union_size = [&](const char* a, const char* b) { return (split.get(a) | split.get(b)).size(); };
    bool bounds_hold = true;

    if (case1) {
        const int tr = union_size("T1", "R1");
        if (tr >= st.t) {
            bounds_hold = false;
            ++stats.counts["sec3.claim_T1R1.exceeded"];
            if (!any_rule(witnesses, RuleId::hp_1, RuleId::hp_2))
                violate(stats, g, p, "sec3.claim_T1R1", counts_detail({{"|T1 u R1|", tr}, {"t", st.t}}));
        }
        const int v1_adj = g.adjacent(p.front(), vk1) ? 1 : 0;
        if (dk1 != size("T1") + size("R1") + size("T2") + v1_adj)
            violate(stats, g, p, "sec3.case1_T2_identity", counts_detail({{"d(vk+1)", dk1}, {"|T2|", size("T2")}}));
        if (tr <= st.t - 1) {
            if (size("T2") < st.s)
                violate(stats, g, p, "sec3.case1_T2_bound", counts_detail({{"|T2|", size("T2")}, {"s", st.s}}));
            else if (size("T2") < st.s + 1)
                ++stats.counts["sec3.case1_T2_equals_s"];
        }
        // The crossing argument needs |T2| >= s, which the previous bound supplies.
        const int su = union_size("S2", "U2");
        if (su >= st.t) {
            bounds_hold = false;
            ++stats.counts["sec3.claim_S2U2.exceeded"];
            if (size("T2") < st.s)
                ++stats.counts["sec3.claim_S2U2.T2_short"];
            else if (!any_rule(witnesses, RuleId::hp_3, RuleId::hp_4))
                violate(stats, g, p, "sec3.claim_S2U2", counts_detail({{"|S2 u U2|", su}, {"t", st.t}}));
        }
        if (dk != size("S1") + size("S2") + size("U2"))
            violate(stats, g, p, "sec3.case1_degree_identity", counts_detail({{"d(vk)", dk}}));
    } else {
        if (size("S3") != dk - size("S1") + 1)
            violate(stats, g, p, "sec3.eq5",
                    counts_detail({{"|S3|", size("S3")}, {"d(vk)", dk}, {"|S1|", size("S1")}}));
        const int tr = union_size("T3", "R3");
        if (tr >= st.t) {
            bounds_hold = false;
            ++stats.counts["sec3.claim_T3R3.exceeded"];
            if (!any_rule(witnesses, RuleId::hp_5, RuleId::hp_6))
                violate(stats, g, p, "sec3.claim_T3R3", counts_detail({{"|T3 u R3|", tr}, {"t", st.t}}));
        }
        if (dk1 != size("T3") + size("R3") + size("T4"))
            violate(stats, g, p, "sec3.case2_T4_identity", counts_detail({{"d(vk+1)", dk1}, {"|T4|", size("T4")}}));
        if (!split.r2) {
            if (tr <= st.t - 1)
                violate(stats, g, p, "sec3.r2_exists", counts_detail({{"|T4|", size("T4")}, {"s", st.s}}));
        } else {
            const int su = union_size("S4", "U4");
            if (su >= st.t) {
                bounds_hold = false;
                ++stats.counts["sec3.claim_S4U4.exceeded"];
                if (!any_rule(witnesses, RuleId::hp_7, RuleId::hp_8))
                    violate(stats, g, p, "sec3.claim_S4U4", counts_detail({{"|S4 u U4|", su}, {"t", st.t}}));
            }
            if (dk != size("S4") + size("U4") + st.s)
                violate(stats, g, p, "sec3.case2_degree_identity",
                        counts_detail({{"d(vk)", dk}, {"|S4|", size("S4")}, {"|U4|", size("U4")}}));
        }
    }

    if (witnesses.empty())
        violate(stats, g, p, "sec3.no_witness", std::string(split_mode_name(split.mode)));
    else if (bounds_hold)
        ++stats.counts["sec3.witness_with_bounds_holding"];
    return true;
}

namespace {

// Depth-first enumeration of paths starting at `start`, extending at the
// tail in increasing vertex order. `visit` returns false to stop.
void walk_paths(const Graph& g, int start, long long budget,
                const std::function<bool(const std::vector<int>&, VertexSet)>& visit)
{
    std::vector<int> seq{start};
    bool stop = false;
    std::function<void(VertexSet)> go = [&](VertexSet left) {
        if (stop || budget-- <= 0) {
            stop = true;
            return;
        }
        if (!visit(seq, left)) {
            stop = true;
            return;
        }
        for (int w : g.neighbors(seq.back()) & left) {
            seq.push_back(w);
            go(left - VertexSet::single(w));
            seq.pop_back();
            if (stop)
                return;
        }
    };
    go(g.vertices() - VertexSet::single(start));
}

} // namespace

void check_endpoint_lemmas(const Graph& g, LemmaStats& stats, const LemmaLimits& limits)
{
    const StSplit st = alpha_tilde_split(g);
    if (st.s + st.t - 1 < 2)
        return;
    for (int start = 0; start < g.order(); ++start) {
        int found = 0;
        walk_paths(g, start, limits.search_nodes, [&](const std::vector<int>& seq, VertexSet) {
            // Each unordered path once: from its smaller end.
            if (seq.size() < 3 || seq.back() < seq.front())
                return true;
            OrientedPath p(seq);
            if (g.degree(p.front()) > g.degree(p.back()))
                p = p.reversed();
            if (check_endpoint_context(g, p, st, stats))
                ++found;
            return found < limits.endpoint_contexts_per_start;
        });
    }
}

void check_virtual_lemmas(const Graph& g, LemmaStats& stats, const LemmaLimits& limits)
{
    const StSplit st = alpha_tilde_split(g);
    const int alpha = st.s + st.t - 1;
    if (alpha < 2)
        return;
    const VertexSet vs = v_star(g, alpha);
    int edges_tried = 0;
    for (int u : vs) {
        for (int v : vs) {
            if (v <= u || g.adjacent(u, v))
                continue;
            if (edges_tried++ >= limits.virtual_edges)
                return;
            const Graph h = g.with_edge(u, v);
            int found = 0;
            for (int start = 0; start < g.order() && found < limits.paths_per_virtual_edge; ++start) {
                walk_paths(h, start, limits.search_nodes, [&](const std::vector<int>& seq, VertexSet left) {
                    if (!left.empty())
                        return true;
                    int k = 0;
                    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                        if ((seq[i] == u && seq[i + 1] == v) || (seq[i] == v && seq[i + 1] == u))
                            k = static_cast<int>(i) + 1;
                    if (k == 0)
                        return true;
                    OrientedPath p(seq, k);
                    if (g.degree(p.at(k + 1)) < g.degree(p.at(k)))
                        p = p.reversed();
                    if (check_virtual_context(g, p, st, stats))
                        ++found;
                    // One path per start vertex keeps the endpoint pairs varied.
                    return false;
                });
            }
        }
    }
}

} // namespace hamfan
