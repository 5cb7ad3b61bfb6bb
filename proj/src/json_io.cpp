#include "json_io.hpp"

namespace hamfan {

namespace {

Json pair_json(const std::optional<Edge>& e)
{
    return e ? Json::array({e->first, e->second}) : Json(nullptr);
}

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::string_view kind_name(CertificateKind k)
{
    return k == CertificateKind::cycle ? "cycle" : "path";
}

} // namespace

Json vertex_list(VertexSet s)
{
    Json out = Json::array();
    for (int v : s)
        out.push_back(v);
    return out;
}

Json to_json(const AlphaTildeResult& r)
{
    Json holes = Json::array();
    for (std::size_t i = 0; i < r.lower_bound_holes.size(); ++i) {
        const auto& h = r.lower_bound_holes[i];
        holes.push_back({{"s", h.a.size()}, {"t", h.b.size()}, {"a", vertex_list(h.a)}, {"b", vertex_list(h.b)}});
    }
    return {{"value", r.value},
            {"witness", {{"s", r.witness.s}, {"t", r.witness.t}}},
            {"lower_bound_holes", holes}};
}

Json to_json(const ConditionReport& r)
{
    return {{"condition_id", r.condition_id},
            {"holds", r.holds},
            {"violating_pair", pair_json(r.violating_pair)},
            {"violating_vertex", optional_json(r.violating_vertex)},
            {"bound_used", r.bound_used},
            {"required_order", r.required_order},
            {"order_ok", r.order_ok},
            {"required_connectivity", r.required_connectivity},
            {"connectivity_ok", r.connectivity_ok},
            {"all_hold", r.all_hold()}};
}

Json to_json(const HamCertificate& c)
{
    return {{"kind", kind_name(c.kind)}, {"vertices", c.verts}};
}

Json to_json(const HamConnectedResult& r)
{
    Json paths = Json::array();
    for (const auto& [pair, cert] : r.paths)
        paths.push_back({{"x", pair.first}, {"y", pair.second}, {"vertices", cert.verts}});
    return {{"hamiltonian_connected", r.connected}, {"failing_pair", pair_json(r.failing_pair)}, {"paths", paths}};
}

Json to_json(const ConstructionTrace& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step = {{"action", s.action}, {"witness", s.witness}, {"result", s.result}, {"shape", kind_name(s.shape)}};
        if (t.kind == CertificateKind::path)
            step["level"] = s.level;
        if (s.virtual_k)
            step["virtual_k"] = *s.virtual_k;
        steps.push_back(std::move(step));
    }
    Json edges = Json::array();
    for (const auto& [u, v] : t.virtual_edges)
        edges.push_back({u, v});
    Json counts = Json::object();
    for (const auto& [k, v] : t.rule_counts())
        counts[k] = v;
    return {{"kind", kind_name(t.kind)},
            {"initial", t.initial},
            {"virtual_edges", edges},
            {"steps", steps},
            {"fallback", t.fallback},
            {"rule_counts", counts}};
}

Json to_json(const RewriteRule& r)
{
    return {{"rule", rule_name(r.id)}, {"witness", r.witness}};
}

Json to_json(const RewriteResult& r)
{
    if (const auto* c = std::get_if<Cycle>(&r))
        return {{"shape", "cycle"}, {"vertices", std::vector<int>(c->vertices().begin(), c->vertices().end())}};
    const auto& p = std::get<OrientedPath>(r);
    Json out = {{"shape", "path"}, {"vertices", std::vector<int>(p.vertices().begin(), p.vertices().end())}};
    if (p.virtual_position())
        out["virtual_k"] = *p.virtual_position();
    return out;
}

Json to_json(const NeighborSplit& s)
{
    Json sets = Json::object();
    for (const auto& [name, members] : s.sets)
        sets[name] = vertex_list(members);
    Json out = {{"mode", split_mode_name(s.mode)}, {"s", s.st.s}, {"t", s.st.t}, {"k", s.k}};
    if (s.mode != SplitMode::sec2) {
        out["r"] = optional_json(s.r);
        if (s.mode == SplitMode::sec3_case2) {
            out["r_prime"] = optional_json(s.r1);
            out["r_double_prime"] = optional_json(s.r2);
        }
    } else {
        out["endpoints_covered"] = s.endpoints_covered;
    }
    out["sets"] = sets;
    return out;
}

Json to_json(const FamilyReport& r)
{
    Json claims = Json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
    Json out = {{"family", family_name(r.spec.family)},
                {"parameter", r.spec.parameter},
                {"graph6", r.graph6},
                {"order", r.order},
                {"claims", claims},
                {"all_pass", r.all_pass()}};
    if (r.spec.family == Family::g2)
        out["failing_pair"] = pair_json(r.failing_pair);
    return out;
}

Json to_json(const LemmaViolation& v)
{
    return {{"check", v.check}, {"graph6", v.graph6}, {"path", v.path}, {"k", v.k}, {"detail", v.detail}};
}

Json to_json(const VerificationRecord& r)
{
    Json hyp = Json::object();
    for (const auto& [name, holds] : r.hypotheses)
        hyp[name] = holds;
    Json out = {{"index", r.index},
                {"graph_id", r.graph_id},
                {"order", r.order},
                {"alpha_tilde", r.alpha_tilde},
                {"connectivity", r.connectivity},
                {"hypotheses", hyp},
                {"hamiltonian", optional_json(r.hamiltonian)},
                {"hamiltonian_connected", optional_json(r.hamiltonian_connected)},
                {"verdict", r.counterexample ? "COUNTEREXAMPLE" : "consistent"}};
    if (r.trace) {
        Json counts = Json::object();
        for (const auto& [k, v] : r.trace->rule_counts)
            counts[k] = v;
        out["trace_summary"] = {{"cycle_built", r.trace->cycle_built},
                                {"cycle_fallback", r.trace->cycle_fallback},
                                {"paths_built", r.trace->paths_built},
                                {"path_fallbacks", r.trace->path_fallbacks},
                                {"rule_counts", counts}};
    }
    return out;
}

namespace {

Json implications_json(const CorpusSummary& s)
{
    Json out = Json::array();
    for (const auto& i : s.implications)
        out.push_back({{"name", i.name},
                       {"premise", i.premise},
                       {"conclusion", i.conclusion},
                       {"violations", i.violations},
                       {"strict", i.strict}});
    return out;
}

template <class Map>
Json map_json(const Map& m)
{
    Json out = Json::object();
    for (const auto& [k, v] : m)
        out[k] = v;
    return out;
}

} // namespace

Json to_json(const CorpusSummary& s)
{
    Json by_order = Json::object();
    for (const auto& [n, c] : s.graphs_by_order)
        by_order[std::to_string(n)] = c;
    Json violations = Json::array();
    for (const auto& v : s.lemmas.violations)
        violations.push_back(to_json(v));
    long long lemma_violations = 0;
    for (const auto& [k, v] : s.lemmas.counts)
        if (k.rfind("violation.", 0) == 0)
            lemma_violations += v;
    return {{"summary", true},
            {"graphs", s.graphs},
            {"graphs_by_order", by_order},
            {"ham_hypothesis", s.ham_hypothesis},
            {"hc_hypothesis", s.hc_hypothesis},
            {"hamiltonian", s.hamiltonian},
            {"hamiltonian_connected", s.hamiltonian_connected},
            {"counterexamples", s.counterexamples},
            {"rejected_candidates", s.rejected_candidates},
            {"counterexample_graphs", s.counterexample_graphs},
            {"degree_condition_holds", map_json(s.degree_condition_holds)},
            {"hypothesis_holds", map_json(s.hypothesis_holds)},
            {"implications", implications_json(s)},
            {"construct",
             {{"cycles", s.construct.cycles},
              {"cycle_fallbacks", s.construct.cycle_fallbacks},
              {"paths", s.construct.paths},
              {"path_fallbacks", s.construct.path_fallbacks},
              {"invalid", s.construct.invalid},
              {"invalid_graphs", s.construct.invalid_graphs},
              {"rule_counts", map_json(s.construct.rule_counts)}}},
            {"lemmas", {{"violations", lemma_violations}, {"counts", map_json(s.lemmas.counts)}, {"examples", violations}}},
            {"property_violated", s.property_violated()}};
}

Json comparison_json(const CorpusSummary& s)
{
    return {{"summary", true},
            {"graphs", s.graphs},
            {"degree_condition_holds", map_json(s.degree_condition_holds)},
            {"hypothesis_holds", map_json(s.hypothesis_holds)},
            {"implications", implications_json(s)}};
}

} // namespace hamfan
