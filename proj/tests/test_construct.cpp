#include "conditions.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hamfan;

TEST_CASE("complete graphs")
{
    const Construction c = construct_hamilton_cycle(complete_graph(4));
    CHECK_FALSE(certificate_defect(complete_graph(4), c.certificate).has_value());
    CHECK_FALSE(c.trace.fallback);
    CHECK(replay_trace(complete_graph(4), c.trace) == c.certificate);

    const Construction p = construct_hamilton_path(complete_graph(5), 0, 4);
    CHECK_FALSE(certificate_defect(complete_graph(5), p.certificate, Edge{0, 4}).has_value());
    CHECK(p.trace.virtual_edges.empty());
    CHECK(p.trace.steps.front().action == "DIRECT");
}

TEST_CASE("hypothesis failures are precondition errors")
{
    CHECK_THROWS_AS(construct_hamilton_cycle(build_family({Family::g1, 2})), PreconditionError);
    const auto [x, y] = g3_b_pair(5);
    CHECK_THROWS_AS(construct_hamilton_path(build_family({Family::g3, 5}), x, y), PreconditionError);
    CHECK_THROWS_AS(construct_hamilton_path(complete_graph(4), 2, 2), Error);
    CHECK_THROWS_AS(construct_hamilton_cycle(complete_graph(2)), PreconditionError);
}

TEST_CASE("replay catches a tampered trace")
{
    const Graph g = cycle_graph(6);
    auto c = drive_hamilton_cycle(g);
    REQUIRE(c.has_value());
    ConstructionTrace t = c->trace;
    REQUIRE_FALSE(t.steps.empty());
    std::reverse(t.steps.back().result.begin(), t.steps.back().result.end() - 1);
    if (t.steps.back().result != c->trace.steps.back().result) {
        CHECK_THROWS_AS(replay_trace(g, t), Error);
    }
    t = c->trace;
    t.steps.back().action = "HP-9";
    CHECK_THROWS_AS(replay_trace(g, t), Error);
}

TEST_CASE("drivers agree with the permutation oracle on every graph with n <= 5")
{
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            const oracle::HamFacts facts = oracle::hamilton_by_permutation(g);
            const auto c = drive_hamilton_cycle(g);
            REQUIRE_MESSAGE(c.has_value() == facts.cycle, emit_graph6(g));
            if (c)
                REQUIRE(replay_trace(g, c->trace) == c->certificate);
            const VirtualChain chain = build_virtual_chain(g);
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    const auto p = drive_hamilton_path(g, chain, x, y);
                    REQUIRE(p.has_value() == facts.path_pairs.count({x, y}) > 0);
                    if (p)
                        REQUIRE(replay_trace(g, p->trace, Edge{x, y}) == p->certificate);
                }
        }
}

TEST_CASE("hypothesis graphs with n <= 6 always yield replayable certificates")
{
    long long cycles = 0, cycle_fallbacks = 0, paths = 0, path_fallbacks = 0;
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            const GraphFacts facts = compute_facts(g);
            if (theorem_ham_hypothesis(g, facts)) {
                const Construction c = construct_hamilton_cycle(g);
                REQUIRE_FALSE(certificate_defect(g, c.certificate).has_value());
                REQUIRE(replay_trace(g, c.trace) == c.certificate);
                ++cycles;
                cycle_fallbacks += c.trace.fallback;
            }
            if (theorem_hc_hypothesis(g, facts)) {
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y) {
                        const Construction p = construct_hamilton_path(g, x, y);
                        REQUIRE_FALSE(certificate_defect(g, p.certificate, Edge{x, y}).has_value());
                        REQUIRE(replay_trace(g, p.trace, Edge{x, y}) == p.certificate);
                        ++paths;
                        path_fallbacks += p.trace.fallback;
                    }
            }
        }
    MESSAGE("cycles " << cycles << " (fallback " << cycle_fallbacks << "), paths " << paths << " (fallback "
                      << path_fallbacks << ")");
    CHECK(cycles > 0);
    CHECK(paths > 0);
}

TEST_CASE("virtual chain stops at a clique on V*")
{
    const Graph g = build_family({Family::g2, 3});
    const VirtualChain chain = build_virtual_chain(g);
    CHECK(chain.edges.empty());
    CHECK(chain.graphs.size() == 1);
    const VirtualChain c6 = build_virtual_chain(cycle_graph(6));
    CHECK(c6.graphs.size() == c6.edges.size() + 1);
}
