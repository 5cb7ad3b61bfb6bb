#define HAMFAN_BUILDING
#include "hamfan/hamfan.h"

#include "bipartite_hole.hpp"
#include "conditions.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "ham_solver.hpp"
#include "harness.hpp"
#include "json_io.hpp"
#include "rewrite.hpp"

#include <cstring>
#include <new>
#include <string>

struct hamfan_graph {
    hamfan::Graph g;
};

using namespace hamfan;

namespace {

thread_local std::string last_error;

hamfan_status status_of(Errc code)
{
    switch (code) {
    case Errc::parse:
        return HAMFAN_ERR_PARSE;
    case Errc::out_of_range:
        return HAMFAN_ERR_RANGE;
    case Errc::invalid_argument:
        return HAMFAN_ERR_ARGUMENT;
    case Errc::precondition:
        return HAMFAN_ERR_PRECONDITION;
    case Errc::threshold_missing:
        return HAMFAN_ERR_THRESHOLD;
    case Errc::too_large:
        return HAMFAN_ERR_TOO_LARGE;
    case Errc::io:
        return HAMFAN_ERR_IO;
    case Errc::internal:
        return HAMFAN_ERR_INTERNAL;
    }
    return HAMFAN_ERR_INTERNAL;
}

hamfan_status fail(hamfan_status status, std::string what)
{
    last_error = std::move(what);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
hamfan_status guarded(F&& body)
{
    try {
        body();
        return HAMFAN_OK;
    } catch (const PreconditionError& e) {
        return fail(HAMFAN_ERR_PRECONDITION, e.check() + ": " + e.what());
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HAMFAN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HAMFAN_ERR_INTERNAL, e.what());
    }
}

void require(const void* p, const char* name)
{
    if (!p)
        throw Error(Errc::invalid_argument, std::string(name) + " must not be null");
}

char* copy_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& j, char** out)
{
    *out = copy_string(j.dump());
}

void set_flag(int* flag, bool value)
{
    if (flag)
        *flag = value ? 1 : 0;
}

void check_vertex(const Graph& g, int v, const char* name)
{
    if (v < 0 || v >= g.order())
        throw Error(Errc::out_of_range, std::string(name) + " = " + std::to_string(v) + " is not a vertex (n = "
                                            + std::to_string(g.order()) + ")");
}

std::vector<int> sequence(const int* seq, size_t len)
{
    if (len > 0)
        require(seq, "sequence");
    return std::vector<int>(seq, seq + len);
}

void check_sequence(const Graph& g, const std::vector<int>& seq)
{
    for (int v : seq)
        check_vertex(g, v, "sequence vertex");
}

std::optional<int> virtual_position(int k)
{
    return k > 0 ? std::optional<int>(k) : std::nullopt;
}

hamfan_status new_graph(Graph g, hamfan_graph** out)
{
    *out = new hamfan_graph{std::move(g)};
    return HAMFAN_OK;
}

std::vector<std::string> split_list(const char* list)
{
    std::vector<std::string> out;
    if (!list)
        return out;
    std::string cur;
    for (const char* c = list;; ++c) {
        if (*c == ',' || *c == '\0') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
            if (*c == '\0')
                break;
        } else if (*c != ' ') {
            cur += *c;
        }
    }
    return out;
}

RunConfig to_config(const hamfan_run_config* c)
{
    RunConfig cfg;
    switch (c->source) {
    case HAMFAN_SOURCE_ALL_LABELED:
        cfg.source = SourceKind::all_labeled;
        break;
    case HAMFAN_SOURCE_GRAPH6_FILE:
        require(c->path, "path");
        cfg.source = SourceKind::graph6_file;
        cfg.path = c->path;
        break;
    case HAMFAN_SOURCE_GRAPH6_TEXT:
        require(c->text, "text");
        cfg.source = SourceKind::graph6_text;
        cfg.text = c->text;
        break;
    case HAMFAN_SOURCE_RANDOM:
        cfg.source = SourceKind::random;
        break;
    default:
        throw Error(Errc::invalid_argument, "unknown corpus source");
    }
    cfg.order = c->order;
    cfg.count = c->count;
    cfg.edge_prob = c->edge_prob;
    cfg.seed = c->seed;
    cfg.check_ham = c->check_ham != 0;
    cfg.check_hc = c->check_hc != 0;
    cfg.construct = c->construct != 0;
    cfg.lemmas = c->lemmas != 0;
    cfg.workers = c->workers;
    return cfg;
}

CorpusSummary run_corpus(const hamfan_run_config* c)
{
    require(c, "config");
    const RunConfig cfg = to_config(c);
    std::function<void(const VerificationRecord&)> sink;
    if (c->sink) {
        sink = [c](const VerificationRecord& rec) {
            const std::string line = to_json(rec).dump();
            c->sink(line.c_str(), c->sink_user);
        };
    }
    return verify_corpus(cfg, sink);
}

} // namespace

extern "C" {

const char* hamfan_version(void)
{
    return "1.0.0";
}

const char* hamfan_status_name(hamfan_status status)
{
    switch (status) {
    case HAMFAN_OK:
        return "ok";
    case HAMFAN_ERR_PARSE:
        return "parse_error";
    case HAMFAN_ERR_RANGE:
        return "out_of_range";
    case HAMFAN_ERR_ARGUMENT:
        return "invalid_argument";
    case HAMFAN_ERR_PRECONDITION:
        return "precondition_failed";
    case HAMFAN_ERR_THRESHOLD:
        return "threshold_missing";
    case HAMFAN_ERR_TOO_LARGE:
        return "too_large";
    case HAMFAN_ERR_IO:
        return "io_error";
    case HAMFAN_ERR_INTERNAL:
        return "internal_error";
    }
    return "unknown";
}

const char* hamfan_last_error(void)
{
    return last_error.c_str();
}

void hamfan_string_free(char* s)
{
    delete[] s;
}

hamfan_status hamfan_graph_parse(const char* text, hamfan_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        new_graph(parse_graph_auto(text), out);
    });
}

hamfan_status hamfan_graph_from_graph6(const char* text, hamfan_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        new_graph(parse_graph6(text), out);
    });
}

hamfan_status hamfan_graph_from_edge_list(const char* text, hamfan_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        new_graph(parse_edge_list(text), out);
    });
}

hamfan_status hamfan_graph_from_edges(int n, const int* pairs, size_t m, hamfan_graph** out)
{
    return guarded([&] {
        require(out, "out");
        if (m > 0)
            require(pairs, "pairs");
        if (n < 0 || n > kMaxVertices)
            throw Error(Errc::out_of_range, "order must lie in 0.." + std::to_string(kMaxVertices));
        std::vector<Edge> edges;
        for (size_t i = 0; i < m; ++i)
            edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
        new_graph(Graph::from_edges(n, edges), out);
    });
}

void hamfan_graph_free(hamfan_graph* g)
{
    delete g;
}

int hamfan_graph_order(const hamfan_graph* g)
{
    return g ? g->g.order() : 0;
}

int hamfan_graph_size(const hamfan_graph* g)
{
    return g ? g->g.size() : 0;
}

int hamfan_graph_adjacent(const hamfan_graph* g, int u, int v)
{
    if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order())
        return 0;
    return g->g.adjacent(u, v) ? 1 : 0;
}

hamfan_status hamfan_graph_to_graph6(const hamfan_graph* g, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(emit_graph6(g->g));
    });
}

hamfan_status hamfan_graph_to_edge_list(const hamfan_graph* g, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(emit_edge_list(g->g));
    });
}

hamfan_status hamfan_alpha_tilde(const hamfan_graph* g, int* value)
{
    return guarded([&] {
        require(g, "graph");
        require(value, "value");
        *value = alpha_tilde_value(g->g);
    });
}

hamfan_status hamfan_alpha_json(const hamfan_graph* g, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        Json j = to_json(alpha_tilde(g->g));
        j["graph6"] = emit_graph6(g->g);
        j["order"] = g->g.order();
        emit(j, out);
    });
}

hamfan_status hamfan_connectivity(const hamfan_graph* g, int cap, int* value)
{
    return guarded([&] {
        require(g, "graph");
        require(value, "value");
        if (cap < 0)
            throw Error(Errc::out_of_range, "connectivity cap must be non-negative");
        *value = connectivity_up_to(g->g, cap);
    });
}

hamfan_status hamfan_check_json(const hamfan_graph* g, const char* conditions, char** out, int* all_hold)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const Graph& h = g->g;
        std::vector<std::string> ids = split_list(conditions);
        if (ids.empty()) {
            for (ConditionId id : kAllConditions)
                ids.emplace_back(condition_name(id));
            ids.emplace_back("admissible");
        }
        const GraphFacts facts = compute_facts(h);
        Json reports = Json::array();
        Json extra = Json::object();
        bool every = true;
        for (const auto& id : ids) {
            if (id == "admissible") {
                ConditionReport r = fan_tilde_condition(h, facts.alpha_tilde + 1);
                r.condition_id = "admissible";
                every = every && r.all_hold();
                reports.push_back(to_json(r));
            } else if (id == "v_star") {
                const VertexSet vs = v_star(h, facts.alpha_tilde);
                extra["v_star"] = {{"vertices", vertex_list(vs)}, {"is_clique", induced_is_clique(h, vs)}};
            } else {
                const ConditionReport r = evaluate_condition(h, parse_condition_id(id), facts);
                every = every && r.all_hold();
                reports.push_back(to_json(r));
            }
        }
        Json j = {{"graph6", emit_graph6(h)},
                  {"order", h.order()},
                  {"alpha_tilde", facts.alpha_tilde},
                  {"connectivity", facts.connectivity},
                  {"reports", reports}};
        for (auto& [k, v] : extra.items())
            j[k] = v;
        j["all_hold"] = every;
        set_flag(all_hold, every);
        emit(j, out);
    });
}

hamfan_status hamfan_theorem_ham_hypothesis(const hamfan_graph* g, int* holds)
{
    return guarded([&] {
        require(g, "graph");
        require(holds, "holds");
        *holds = theorem_ham_hypothesis(g->g) ? 1 : 0;
    });
}

hamfan_status hamfan_theorem_hc_hypothesis(const hamfan_graph* g, int* holds)
{
    return guarded([&] {
        require(g, "graph");
        require(holds, "holds");
        *holds = theorem_hc_hypothesis(g->g) ? 1 : 0;
    });
}

hamfan_status hamfan_hamilton_json(const hamfan_graph* g, hamfan_ham_mode mode, int x, int y, char** out, int* found)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const Graph& h = g->g;
        Json j = {{"graph6", emit_graph6(h)}, {"order", h.order()}};
        switch (mode) {
        case HAMFAN_HAM_CYCLE: {
            const auto cert = hamilton_cycle(h);
            j["mode"] = "cycle";
            j["found"] = cert.has_value();
            j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
            set_flag(found, cert.has_value());
            break;
        }
        case HAMFAN_HAM_PATH: {
            check_vertex(h, x, "x");
            check_vertex(h, y, "y");
            const auto cert = hamilton_path_between(h, x, y);
            j["mode"] = "path";
            j["x"] = x;
            j["y"] = y;
            j["found"] = cert.has_value();
            j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
            set_flag(found, cert.has_value());
            break;
        }
        case HAMFAN_HAM_CONNECTED: {
            const HamConnectedResult r = is_hamiltonian_connected(h);
            j["mode"] = "connected";
            const Json body = to_json(r);
            for (const auto& [k, v] : body.items())
                j[k] = v;
            set_flag(found, r.connected);
            break;
        }
        default:
            throw Error(Errc::invalid_argument, "unknown Hamilton mode");
        }
        emit(j, out);
    });
}

hamfan_status hamfan_construct_json(const hamfan_graph* g, hamfan_ham_mode mode, int x, int y, char** out,
                                    int* replayed)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const Graph& h = g->g;
        Construction c;
        std::optional<Edge> ends;
        if (mode == HAMFAN_HAM_CYCLE) {
            c = construct_hamilton_cycle(h);
        } else if (mode == HAMFAN_HAM_PATH) {
            check_vertex(h, x, "x");
            check_vertex(h, y, "y");
            c = construct_hamilton_path(h, x, y);
            ends = Edge{x, y};
        } else {
            throw Error(Errc::invalid_argument, "construct supports cycle and path modes");
        }
        bool ok = false;
        std::string replay_error;
        try {
            ok = replay_trace(h, c.trace, ends) == c.certificate && !certificate_defect(h, c.certificate, ends);
        } catch (const Error& e) {
            replay_error = e.what();
        }
        Json j = {{"graph6", emit_graph6(h)},
                  {"order", h.order()},
                  {"certificate", to_json(c.certificate)},
                  {"trace", to_json(c.trace)},
                  {"replayed", ok}};
        if (!replay_error.empty())
            j["replay_error"] = replay_error;
        set_flag(replayed, ok);
        emit(j, out);
    });
}

hamfan_status hamfan_rewrite_json(const hamfan_graph* g, const char* rule, const int* seq, size_t len, int is_cycle,
                                  const int* witness, size_t witness_len, int virtual_k, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(rule, "rule");
        require(out, "out");
        const Graph& h = g->g;
        const std::vector<int> verts = sequence(seq, len);
        check_sequence(h, verts);
        const RewriteRule r{parse_rule_id(rule), sequence(witness, witness_len)};
        if (static_cast<int>(r.witness.size()) != rule_arity(r.id))
            throw Error(Errc::invalid_argument, std::string(rule) + " takes " + std::to_string(rule_arity(r.id))
                                                    + " witness indices");
        Json j = {{"rule", rule_name(r.id)}, {"witness", r.witness}};
        if (is_cycle) {
            const Cycle c(verts);
            if (auto bad = cycle_defect(h, c))
                throw Error(Errc::invalid_argument, "input is not a cycle: " + *bad);
            j["input"] = {{"shape", "cycle"}, {"vertices", verts}};
            j["output"] = to_json(RewriteResult(apply_rewrite(h, c, r)));
        } else {
            const OrientedPath p(verts, virtual_position(virtual_k));
            if (auto bad = path_defect(h, p))
                throw Error(Errc::invalid_argument, "input is not a path: " + *bad);
            j["input"] = to_json(RewriteResult(p));
            j["output"] = to_json(apply_rewrite(h, p, r));
        }
        emit(j, out);
    });
}

hamfan_status hamfan_witnesses_json(const hamfan_graph* g, const char* rule, const int* seq, size_t len, int is_cycle,
                                    int virtual_k, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(rule, "rule");
        require(out, "out");
        const Graph& h = g->g;
        const std::vector<int> verts = sequence(seq, len);
        check_sequence(h, verts);
        const RuleId id = parse_rule_id(rule);
        std::vector<RewriteRule> found;
        if (is_cycle)
            found = enumerate_witnesses(h, Cycle(verts), id);
        else
            found = enumerate_witnesses(h, OrientedPath(verts, virtual_position(virtual_k)), id);
        Json arr = Json::array();
        for (const auto& r : found)
            arr.push_back(r.witness);
        emit(Json{{"rule", rule_name(id)}, {"witnesses", arr}}, out);
    });
}

hamfan_status hamfan_split_json(const hamfan_graph* g, const char* mode, const int* seq, size_t len, int virtual_k,
                                char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(mode, "mode");
        require(out, "out");
        const Graph& h = g->g;
        const std::vector<int> verts = sequence(seq, len);
        check_sequence(h, verts);
        const OrientedPath p(verts, virtual_position(virtual_k));
        if (auto bad = path_defect(h, p))
            throw Error(Errc::invalid_argument, "input is not a path: " + *bad);
        NeighborSplit split;
        if (std::string_view(mode) == "sec3")
            split = compute_sec3_split(h, p, alpha_tilde_split(h));
        else
            split = compute_neighbor_split(h, p, parse_split_mode(mode));
        Json crossings = Json::array();
        for (const auto& r : split_crossings(h, p, split))
            crossings.push_back(to_json(r));
        Json witnesses = Json::array();
        for (const auto& r : split_witnesses(h, p, split))
            witnesses.push_back(to_json(r));
        Json j = to_json(split);
        j["consistent"] = split_is_consistent(h, p, split);
        j["crossings"] = crossings;
        j["witnesses"] = witnesses;
        emit(j, out);
    });
}

hamfan_status hamfan_extremal_graph(const char* family, int parameter, hamfan_graph** out)
{
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        new_graph(build_family(FamilySpec{parse_family(family), parameter}), out);
    });
}

hamfan_status hamfan_extremal_verify_json(const char* family, int parameter, char** out, int* all_pass)
{
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        const FamilyReport r = verify_family_claims(FamilySpec{parse_family(family), parameter});
        set_flag(all_pass, r.all_pass());
        emit(to_json(r), out);
    });
}

void hamfan_run_config_init(hamfan_run_config* cfg)
{
    if (!cfg)
        return;
    *cfg = hamfan_run_config{};
    cfg->source = HAMFAN_SOURCE_ALL_LABELED;
    cfg->edge_prob = 0.5;
    cfg->seed = 1;
    cfg->check_ham = 1;
    cfg->check_hc = 1;
    cfg->workers = 1;
}

int hamfan_resolve_workers(const hamfan_run_config* cfg)
{
    try {
        RunConfig rc;
        rc.workers = cfg ? cfg->workers : 1;
        return resolve_workers(rc);
    } catch (const Error& e) {
        last_error = e.what();
        return -1;
    }
}

hamfan_status hamfan_verify_json(const hamfan_run_config* cfg, char** out, int* violated)
{
    return guarded([&] {
        require(out, "out");
        const CorpusSummary s = run_corpus(cfg);
        set_flag(violated, s.property_violated());
        emit(to_json(s), out);
    });
}

hamfan_status hamfan_compare_json(const hamfan_run_config* cfg, char** out, int* violated)
{
    return guarded([&] {
        require(out, "out");
        const CorpusSummary s = run_corpus(cfg);
        bool bad = false;
        for (const auto& i : s.implications)
            bad = bad || i.violations > 0;
        set_flag(violated, bad);
        emit(comparison_json(s), out);
    });
}

} // extern "C"
