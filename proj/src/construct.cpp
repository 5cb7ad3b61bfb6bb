#include "construct.hpp"

#include "bipartite_hole.hpp"
#include "conditions.hpp"
#include "errors.hpp"
#include "ham_solver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hamfan {

std::map<std::string, int> ConstructionTrace::rule_counts() const
{
    std::map<std::string, int> out;
    for (const auto& step : steps)
        ++out[step.action];
    return out;
}

namespace {

std::vector<int> to_vector(std::span<const int> s)
{
    return {s.begin(), s.end()};
}

// --- cycle driver --------------------------------------------------------------

class CycleDriver {
public:
    explicit CycleDriver(const Graph& g) : g_(g), n_(g.order()) { trace_.kind = CertificateKind::cycle; }

    std::optional<Construction> run()
    {
        if (n_ < 3 || g_.min_degree() < 2 || !is_connected(g_))
            return std::nullopt;
        OrientedPath p = longest_path_from(g_, OrientedPath({0}));
        trace_.initial = to_vector(p.vertices());

        // Each pass either closes a longer cycle or lengthens the path, so
        // n passes bound the loop; the extra slack is defensive.
        for (int pass = 0; pass < 4 * n_ + 4; ++pass) {
            extend(p);
            if (auto c = close(p)) {
                if (c->size() == n_)
                    return finish(CertificateKind::cycle, to_vector(c->vertices()));
                auto absorbed = absorb(*c);
                if (!absorbed)
                    break;
                p = std::move(*absorbed);
                continue;
            }
            auto rotated = rotate(p);
            if (!rotated)
                break;
            p = std::move(*rotated);
        }
        return fallback();
    }

private:
    void record(std::string action, std::vector<int> witness, std::span<const int> seq, CertificateKind shape)
    {
        trace_.steps.push_back(TraceStep{std::move(action), std::move(witness), to_vector(seq), shape, 0, {}});
    }

    void extend(OrientedPath& p)
    {
        for (;;) {
            const VertexSet off = g_.vertices() - p.vertex_set();
            VertexSet at_back = g_.neighbors(p.back()) & off;
            if (at_back.empty() && !(g_.neighbors(p.front()) & off).empty()) {
                p = p.reversed();
                record("REVERSE", {}, p.vertices(), CertificateKind::path);
                at_back = g_.neighbors(p.back()) & off;
            }
            if (at_back.empty())
                return;
            std::vector<int> seq = to_vector(p.vertices());
            seq.push_back(at_back.first());
            p = OrientedPath(std::move(seq));
            record("EXTEND", {p.back()}, p.vertices(), CertificateKind::path);
        }
    }

    std::optional<Cycle> close(const OrientedPath& p)
    {
        if (p.size() < 3)
            return std::nullopt;
        if (g_.adjacent(p.front(), p.back())) {
            record("CLOSE", {}, p.vertices(), CertificateKind::cycle);
            return Cycle(to_vector(p.vertices()));
        }
        auto rule = find_closing_rule(g_, p);
        if (!rule)
            return std::nullopt;
        Cycle c = std::get<Cycle>(apply_rewrite(g_, p, *rule));
        record(std::string(rule_name(rule->id)), rule->witness, c.vertices(), CertificateKind::cycle);
        return c;
    }

    std::optional<OrientedPath> absorb(const Cycle& c)
    {
        const VertexSet on = c.vertex_set();
        for (int i = 1; i <= c.size(); ++i) {
            const VertexSet off = g_.neighbors(c.at(i)) - on;
            if (off.empty())
                continue;
            RewriteRule rule{RuleId::ctl, {i, off.first()}};
            OrientedPath p = apply_rewrite(g_, c, rule);
            record("CTL", rule.witness, p.vertices(), CertificateKind::path);
            return p;
        }
        return std::nullopt;
    }

    bool is_goal(const OrientedPath& p) const
    {
        const VertexSet off = g_.vertices() - p.vertex_set();
        if (!(g_.neighbors(p.front()) & off).empty() || !(g_.neighbors(p.back()) & off).empty())
            return true;
        if (p.size() >= 3 && g_.adjacent(p.front(), p.back()))
            return true;
        return find_closing_rule(g_, p).has_value();
    }

    struct Node {
        OrientedPath path;
        int parent;
        std::string action;
        std::vector<int> witness;
    };

    // Breadth-first search over RT-A / RT-B rotations of the first endpoint
    // and reversals, keyed by the ordered endpoint pair.
    std::optional<OrientedPath> rotate(const OrientedPath& root)
    {
        std::vector<Node> nodes{{root, -1, "", {}}};
        std::set<std::pair<int, int>> seen{{root.front(), root.back()}};
        std::deque<int> queue{0};
        int budget = n_ * n_;

        auto offer = [&](int parent, OrientedPath child, std::string action, std::vector<int> witness) -> int {
            if (!seen.insert({child.front(), child.back()}).second)
                return -1;
            nodes.push_back(Node{std::move(child), parent, std::move(action), std::move(witness)});
            queue.push_back(static_cast<int>(nodes.size()) - 1);
            return static_cast<int>(nodes.size()) - 1;
        };

        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            const OrientedPath p = nodes[at].path;
            const int m = p.size();
            std::vector<std::pair<RewriteRule, OrientedPath>> children;
            for (int l = 3; l <= m; ++l)
                if (g_.adjacent(p.front(), p.at(l)))
                    children.push_back({RewriteRule{RuleId::rt_a, {l}}, {}});
            for (int j = 2; j + 2 <= m; ++j) {
                if (!g_.adjacent(p.front(), p.at(j + 1)))
                    continue;
                for (int jp = j + 2; jp <= m; ++jp)
                    if (g_.adjacent(p.at(j), p.at(jp)))
                        children.push_back({RewriteRule{RuleId::rt_b, {j, jp}}, {}});
            }
            for (auto& [rule, out] : children) {
                if (budget-- <= 0)
                    return std::nullopt;
                out = std::get<OrientedPath>(apply_rewrite(g_, p, rule));
                const int idx = offer(at, out, std::string(rule_name(rule.id)), rule.witness);
                if (idx >= 0 && is_goal(nodes[idx].path))
                    return unwind(nodes, idx);
            }
            offer(at, p.reversed(), "REVERSE", {});
        }
        return std::nullopt;
    }

    OrientedPath unwind(const std::vector<Node>& nodes, int idx)
    {
        std::vector<int> chain;
        for (int at = idx; nodes[at].parent >= 0; at = nodes[at].parent)
            chain.push_back(at);
        std::reverse(chain.begin(), chain.end());
        for (int at : chain)
            record(nodes[at].action, nodes[at].witness, nodes[at].path.vertices(), CertificateKind::path);
        return nodes[idx].path;
    }

    std::optional<Construction> fallback()
    {
        auto cert = hamilton_cycle(g_);
        if (!cert)
            return std::nullopt;
        trace_.fallback = true;
        record("FALLBACK", {}, cert->verts, CertificateKind::cycle);
        return finish(CertificateKind::cycle, cert->verts);
    }

    std::optional<Construction> finish(CertificateKind kind, std::vector<int> seq)
    {
        return Construction{HamCertificate{kind, std::move(seq)}, std::move(trace_)};
    }

    const Graph& g_;
    int n_;
    ConstructionTrace trace_;
};

// --- path driver ---------------------------------------------------------------

std::optional<int> edge_position(const std::vector<int>& seq, Edge e)
{
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const int a = seq[i], b = seq[i + 1];
        if ((a == e.first && b == e.second) || (a == e.second && b == e.first))
            return static_cast<int>(i) + 1;
    }
    return std::nullopt;
}

std::optional<RewriteRule> choose_hp(const Graph& g, const OrientedPath& q, StSplit st)
{
    try {
        auto witnesses = split_witnesses(g, q, compute_sec3_split(g, q, st));
        if (!witnesses.empty())
            return witnesses.front();
    } catch (const Error& e) {
        if (e.code() != Errc::threshold_missing)
            throw;
    }
    for (RuleId id : kAllRules) {
        if (!is_hp_rule(id))
            continue;
        auto all = enumerate_witnesses(g, q, id);
        if (!all.empty())
            return all.front();
    }
    return std::nullopt;
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " outside the graph");
}

} // namespace

std::optional<Construction> drive_hamilton_cycle(const Graph& g)
{
    return CycleDriver(g).run();
}

VirtualChain build_virtual_chain(const Graph& g)
{
    VirtualChain chain;
    chain.graphs.push_back(g);
    for (;;) {
        const Graph& cur = chain.graphs.back();
        if (cur.is_complete())
            break;
        const VertexSet vs = v_star(cur, alpha_tilde_value(cur));
        std::optional<Edge> best;
        int best_score = -1;
        for (int u : vs)
            for (int v : vs) {
                if (v <= u || cur.adjacent(u, v))
                    continue;
                const int score = std::min(cur.degree(u), cur.degree(v));
                if (score > best_score) {
                    best_score = score;
                    best = Edge{u, v};
                }
            }
        if (!best)
            break;
        chain.edges.push_back(*best);
        chain.graphs.push_back(cur.with_edge(best->first, best->second));
    }
    return chain;
}

std::optional<Construction> drive_hamilton_path(const Graph& g, const VirtualChain& chain, int x, int y)
{
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y)
        throw Error(Errc::invalid_argument, "Hamilton path endpoints must be distinct");
    if (chain.graphs.empty() || !(chain.graphs.front() == g))
        throw Error(Errc::invalid_argument, "chain was built for a different graph");

    ConstructionTrace trace;
    trace.kind = CertificateKind::path;
    trace.virtual_edges = chain.edges;
    auto record = [&](std::string action, std::vector<int> witness, std::vector<int> seq, int level,
                      std::optional<int> k = std::nullopt) {
        trace.steps.push_back(TraceStep{std::move(action), std::move(witness), std::move(seq),
                                        CertificateKind::path, level, k});
    };

    int level = static_cast<int>(chain.edges.size());
    const Graph& top = chain.graphs[level];
    std::vector<int> seq;
    if (top.is_complete()) {
        seq.push_back(x);
        for (int v = 0; v < g.order(); ++v)
            if (v != x && v != y)
                seq.push_back(v);
        seq.push_back(y);
        record("DIRECT", {}, seq, level);
    } else if (auto cert = hamilton_path_between(top, x, y)) {
        // A path of the augmented graph is the starting point of the unwinding;
        // only with no virtual edge at all is the solver doing the whole job.
        seq = cert->verts;
        trace.fallback = level == 0;
        record(level == 0 ? "FALLBACK" : "SEED", {}, seq, level);
    } else {
        return std::nullopt;
    }
    trace.initial = seq;

    while (level > 0) {
        const Edge e = chain.edges[level - 1];
        const Graph& below = chain.graphs[level - 1];
        --level;
        const auto k = edge_position(seq, e);
        if (!k) {
            record("KEEP", {}, seq, level);
            continue;
        }
        OrientedPath q(seq, *k);
        const bool flip = below.degree(q.at(*k + 1)) < below.degree(q.at(*k));
        if (flip) {
            q = q.reversed();
            record("REVERSE", {}, to_vector(q.vertices()), level + 1);
        }
        // An alpha~ split of the graph at this level.
        const StSplit st = alpha_tilde_split(below);
        std::optional<RewriteRule> rule;
        if (st.s + st.t - 1 >= 2)
            rule = choose_hp(below, q, st);
        if (rule) {
            const int qk = *q.virtual_position();
            OrientedPath out = std::get<OrientedPath>(apply_rewrite(below, q, *rule));
            record(std::string(rule_name(rule->id)), rule->witness, to_vector(out.vertices()), level, qk);
            if (flip) {
                out = out.reversed();
                record("REVERSE", {}, to_vector(out.vertices()), level);
            }
            seq = to_vector(out.vertices());
            continue;
        }
        auto cert = hamilton_path_between(below, x, y);
        if (!cert)
            return std::nullopt;
        trace.fallback = true;
        seq = cert->verts;
        record("FALLBACK", {}, seq, level);
    }
    return Construction{HamCertificate{CertificateKind::path, seq}, std::move(trace)};
}

std::optional<Construction> drive_hamilton_path(const Graph& g, int x, int y)
{
    return drive_hamilton_path(g, build_virtual_chain(g), x, y);
}

Construction construct_hamilton_cycle(const Graph& g)
{
    if (!theorem_ham_hypothesis(g))
        throw PreconditionError("hypothesis", "graph does not satisfy the hamiltonicity hypothesis");
    auto out = drive_hamilton_cycle(g);
    if (!out)
        throw Error(Errc::internal, "no Hamilton cycle although the hypothesis holds");
    return std::move(*out);
}

Construction construct_hamilton_path(const Graph& g, int x, int y)
{
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y)
        throw Error(Errc::invalid_argument, "Hamilton path endpoints must be distinct");
    if (!theorem_hc_hypothesis(g))
        throw PreconditionError("hypothesis", "graph does not satisfy the hamiltonian-connectedness hypothesis");
    auto out = drive_hamilton_path(g, x, y);
    if (!out)
        throw Error(Errc::internal, "no Hamilton path although the hypothesis holds");
    return std::move(*out);
}

// --- replay --------------------------------------------------------------------

HamCertificate replay_trace(const Graph& g, const ConstructionTrace& trace, std::optional<Edge> endpoints)
{
    std::vector<Graph> levels{g};
    for (const auto& [u, v] : trace.virtual_edges) {
        check_vertex(g, u);
        check_vertex(g, v);
        if (u == v || levels.back().adjacent(u, v))
            throw Error(Errc::internal, "trace virtual edge is not a non-edge");
        levels.push_back(levels.back().with_edge(u, v));
    }

    std::vector<int> seq = trace.initial;
    CertificateKind shape = CertificateKind::path;
    int index = 0;
    auto fail = [&](const std::string& why) -> Error {
        return Error(Errc::internal, "trace step " + std::to_string(index) + ": " + why);
    };

    for (const auto& step : trace.steps) {
        if (step.level < 0 || step.level >= static_cast<int>(levels.size()))
            throw fail("level out of range");
        const Graph& h = levels[step.level];
        try {
            if (step.action == "EXTEND") {
                if (shape != CertificateKind::path || step.witness.size() != 1)
                    throw fail("EXTEND needs a path and one vertex");
                const int w = step.witness[0];
                check_vertex(g, w);
                if (std::find(seq.begin(), seq.end(), w) != seq.end() || !h.adjacent(seq.back(), w))
                    throw fail("EXTEND vertex is not an off-path neighbour of the end");
                seq.push_back(w);
            } else if (step.action == "REVERSE") {
                if (shape != CertificateKind::path)
                    throw fail("REVERSE needs a path");
                std::reverse(seq.begin(), seq.end());
            } else if (step.action == "CLOSE") {
                if (shape != CertificateKind::path || seq.size() < 3 || !h.adjacent(seq.front(), seq.back()))
                    throw fail("CLOSE needs a path with adjacent ends");
                shape = CertificateKind::cycle;
            } else if (step.action == "KEEP") {
                if (auto bad = path_defect(h, OrientedPath(seq)))
                    throw fail("KEEP path invalid: " + *bad);
            } else if (step.action == "DIRECT" || step.action == "SEED" || step.action == "FALLBACK") {
                seq = step.result;
                shape = step.shape;
            } else {
                const RewriteRule rule{parse_rule_id(step.action), step.witness};
                if (rule.id == RuleId::ctl) {
                    if (shape != CertificateKind::cycle)
                        throw fail("CTL needs a cycle");
                    seq = to_vector(apply_rewrite(h, Cycle(seq), rule).vertices());
                    shape = CertificateKind::path;
                } else {
                    if (shape != CertificateKind::path)
                        throw fail("rule needs a path");
                    const OrientedPath in(seq, is_hp_rule(rule.id) ? step.virtual_k : std::nullopt);
                    RewriteResult out = apply_rewrite(h, in, rule);
                    if (auto* c = std::get_if<Cycle>(&out)) {
                        seq = to_vector(c->vertices());
                        shape = CertificateKind::cycle;
                    } else {
                        seq = to_vector(std::get<OrientedPath>(out).vertices());
                    }
                }
            }
        } catch (const PreconditionError& e) {
            throw fail(e.what());
        }
        if (seq != step.result || shape != step.shape)
            throw fail("result differs from the recorded sequence");
        ++index;
    }

    HamCertificate cert{shape, seq};
    if (shape != trace.kind)
        throw Error(Errc::internal, "trace ends in the wrong certificate kind");
    if (auto bad = certificate_defect(g, cert, endpoints))
        throw Error(Errc::internal, "replayed certificate invalid: " + *bad);
    return cert;
}

} // namespace hamfan
