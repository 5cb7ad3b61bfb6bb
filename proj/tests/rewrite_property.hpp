// Randomised soundness run for the rewrite rules, shared by the unit tests
// and the acceptance binary. Outputs are re-validated here edge by edge,
// without the library's own defect checks.
#pragma once

#include "errors.hpp"
#include "rewrite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace property {

using namespace hamfan;

struct RewriteRun {
    long long cases = 0;
    long long invalid = 0;
    long long rejected_ok = 0;  ///< non-witnesses that raised PreconditionError
    long long rejected_bad = 0; ///< non-witnesses that were accepted or threw otherwise
    std::map<std::string, long long> per_rule;
    std::vector<std::string> failures;

    long long min_rule_count() const
    {
        long long low = -1;
        for (RuleId id : kAllRules) {
            auto it = per_rule.find(std::string(rule_name(id)));
            const long long c = it == per_rule.end() ? 0 : it->second;
            low = low < 0 ? c : std::min(low, c);
        }
        return low;
    }
};

inline bool same_vertices(std::vector<int> a, std::vector<int> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
}

inline bool walk_ok(const Graph& g, const std::vector<int>& seq, bool closed)
{
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1]))
            return false;
    return !closed || (seq.size() >= 3 && g.adjacent(seq.back(), seq.front()));
}

class RewriteProperty {
public:
    explicit RewriteProperty(std::uint64_t seed) : rng_(seed) {}

    // Runs until `min_cases` witnesses were applied and every rule was
    // exercised at least `min_per_rule` times (or the round cap is hit).
    RewriteRun run(long long min_cases, long long min_per_rule, long long max_rounds = 2'000'000)
    {
        for (long long round = 0; round < max_rounds; ++round) {
            if (out_.cases >= min_cases && out_.min_rule_count() >= min_per_rule)
                break;
            switch (round % 3) {
            case 0: path_round(); break;
            case 1: cycle_round(); break;
            default: virtual_round(); break;
            }
        }
        return out_;
    }

private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::vector<int> random_order(int n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        std::shuffle(v.begin(), v.end(), rng_);
        return v;
    }

    // Random graph on n vertices containing the walk `seq` (minus one
    // optional pair that is forced absent).
    Graph graph_around(int n, const std::vector<int>& seq, bool closed, int skip = -1)
    {
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.25, 0.85)(rng_));
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng_))
                    edges.emplace_back(i, j);
        const int m = static_cast<int>(seq.size());
        for (int i = 0; i + 1 < m; ++i)
            if (i != skip)
                edges.emplace_back(seq[i], seq[i + 1]);
        if (closed)
            edges.emplace_back(seq.back(), seq.front());
        Graph g = Graph::from_edges(n, edges);
        if (skip >= 0) {
            std::vector<Edge> kept;
            for (const Edge& e : g.edges())
                if (!(std::minmax(e.first, e.second) == std::minmax(seq[skip], seq[skip + 1])))
                    kept.push_back(e);
            g = Graph::from_edges(n, kept);
        }
        return g;
    }

    void fail(const std::string& what)
    {
        ++out_.invalid;
        if (out_.failures.size() < 20)
            out_.failures.push_back(what);
    }

    void count(RuleId id)
    {
        ++out_.cases;
        ++out_.per_rule[std::string(rule_name(id))];
    }

    // A few random non-witness tuples per rule must be refused.
    template <class Shape>
    void probe_rejects(const Graph& g, const Shape& shape, RuleId id, const std::vector<RewriteRule>& found)
    {
        for (int i = 0; i < 2; ++i) {
            RewriteRule r{id, {}};
            for (int a = 0; a < rule_arity(id); ++a)
                r.witness.push_back(uniform(0, shape.size() + 1));
            if (id == RuleId::ctl)
                r.witness[1] = uniform(0, g.order() - 1);
            if (std::find(found.begin(), found.end(), r) != found.end())
                continue;
            try {
                apply_rewrite(g, shape, r);
                ++out_.rejected_bad;
            } catch (const PreconditionError&) {
                ++out_.rejected_ok;
            } catch (...) {
                ++out_.rejected_bad;
            }
        }
    }

    void path_round()
    {
        const int n = uniform(3, 9);
        const int m = uniform(3, n);
        std::vector<int> seq = random_order(n);
        seq.resize(m);
        const Graph g = graph_around(n, seq, false);
        const OrientedPath p(seq);
        for (RuleId id : {RuleId::rt_a, RuleId::rt_b, RuleId::rc_0, RuleId::rc_1, RuleId::rc_2}) {
            const auto found = enumerate_witnesses(g, p, id);
            for (const RewriteRule& r : found) {
                count(id);
                check_path_rule(g, p, r);
            }
            probe_rejects(g, p, id, found);
        }
    }

    void check_path_rule(const Graph& g, const OrientedPath& p, const RewriteRule& r)
    {
        const std::vector<int> in(p.vertices().begin(), p.vertices().end());
        const std::string tag = std::string(rule_name(r.id)) + " on " + emit_graph6(g);
        try {
            const RewriteResult res = apply_rewrite(g, p, r);
            if (is_rc_rule(r.id)) {
                const Cycle* c = std::get_if<Cycle>(&res);
                if (!c) {
                    fail(tag + ": expected a cycle");
                    return;
                }
                const std::vector<int> out(c->vertices().begin(), c->vertices().end());
                if (!same_vertices(in, out) || !walk_ok(g, out, true))
                    fail(tag + ": invalid cycle");
                return;
            }
            const OrientedPath* q = std::get_if<OrientedPath>(&res);
            if (!q) {
                fail(tag + ": expected a path");
                return;
            }
            const std::vector<int> out(q->vertices().begin(), q->vertices().end());
            const bool rotated = q->back() == p.back() && q->front() != p.front();
            if (!same_vertices(in, out) || !walk_ok(g, out, false) || !rotated)
                fail(tag + ": invalid rotation");
        } catch (const std::exception& e) {
            fail(tag + ": threw " + e.what());
        }
    }

    void cycle_round()
    {
        const int n = uniform(4, 9);
        const int m = uniform(3, n - 1);
        std::vector<int> seq = random_order(n);
        seq.resize(m);
        const Graph g = graph_around(n, seq, true);
        const Cycle c(seq);
        const auto found = enumerate_witnesses(g, c, RuleId::ctl);
        for (const RewriteRule& r : found) {
            count(RuleId::ctl);
            const std::string tag = "CTL on " + emit_graph6(g);
            try {
                const OrientedPath q = apply_rewrite(g, c, r);
                std::vector<int> expect = seq;
                expect.push_back(r.witness[1]);
                const std::vector<int> out(q.vertices().begin(), q.vertices().end());
                if (!same_vertices(expect, out) || !walk_ok(g, out, false) || q.front() != r.witness[1])
                    fail(tag + ": invalid path");
            } catch (const std::exception& e) {
                fail(tag + ": threw " + e.what());
            }
        }
        probe_rejects(g, c, RuleId::ctl, found);
    }

    void virtual_round()
    {
        const int n = uniform(4, 9);
        const std::vector<int> seq = random_order(n);
        const int k = uniform(1, n - 1);
        const Graph g = graph_around(n, seq, false, k - 1);
        const OrientedPath p(seq, k);
        for (RuleId id : kAllRules) {
            if (!is_hp_rule(id))
                continue;
            const auto found = enumerate_witnesses(g, p, id);
            for (const RewriteRule& r : found) {
                count(id);
                const std::string tag = std::string(rule_name(id)) + " on " + emit_graph6(g);
                try {
                    const RewriteResult res = apply_rewrite(g, p, r);
                    const OrientedPath* q = std::get_if<OrientedPath>(&res);
                    if (!q) {
                        fail(tag + ": expected a path");
                        continue;
                    }
                    const std::vector<int> out(q->vertices().begin(), q->vertices().end());
                    // walk_ok over g alone already excludes the virtual pair.
                    if (!same_vertices(seq, out) || !walk_ok(g, out, false) || q->front() != seq.front()
                        || q->back() != seq.back() || q->virtual_position())
                        fail(tag + ": invalid Hamilton path");
                } catch (const std::exception& e) {
                    fail(tag + ": threw " + e.what());
                }
            }
            probe_rejects(g, p, id, found);
        }
    }

    std::mt19937_64 rng_;
    RewriteRun out_;
};

} // namespace property
