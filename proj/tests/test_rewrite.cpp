#include "errors.hpp"
#include "oracles.hpp"
#include "rewrite.hpp"
#include "rewrite_property.hpp"

#include <doctest.h>

using namespace hamfan;

namespace {

Graph path_plus(int n, std::vector<Edge> extra)
{
    for (int i = 0; i + 1 < n; ++i)
        extra.emplace_back(i, i + 1);
    return Graph::from_edges(n, extra);
}

OrientedPath identity_path(int n, std::optional<int> k = std::nullopt)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return OrientedPath(v, k);
}

} // namespace

TEST_CASE("rule names")
{
    for (RuleId id : kAllRules)
        CHECK(parse_rule_id(rule_name(id)) == id);
    CHECK_THROWS_AS(parse_rule_id("HP-9"), Error);
    CHECK(rule_arity(RuleId::rt_a) == 1);
    CHECK(rule_arity(RuleId::hp_8) == 2);
}

TEST_CASE("RT-A rotation example")
{
    const Graph g = path_plus(5, {{0, 3}});
    const RewriteResult r = apply_rewrite(g, identity_path(5), {RuleId::rt_a, {4}});
    CHECK(std::get<OrientedPath>(r) == OrientedPath({2, 1, 0, 3, 4}));
}

TEST_CASE("RC-1 closing example")
{
    const Graph g = path_plus(5, {{4, 1}, {0, 2}});
    const RewriteResult r = apply_rewrite(g, identity_path(5), {RuleId::rc_1, {2}});
    CHECK(std::get<Cycle>(r) == Cycle({0, 1, 4, 3, 2}));
    CHECK(find_closing_rule(g, identity_path(5)).has_value());
}

TEST_CASE("RT-B and RC-0 follow their displayed orders")
{
    // v1 ~ v3 and v2 ~ v5 with j = 2, j' = 5.
    const Graph g = path_plus(6, {{0, 2}, {1, 4}});
    const auto rt = apply_rewrite(g, identity_path(6), {RuleId::rt_b, {2, 5}});
    CHECK(std::get<OrientedPath>(rt) == OrientedPath({3, 2, 0, 1, 4, 5}));

    // a = 3, b = 4: v1 ~ v3, v6 ~ v4, v2 ~ v5.
    const Graph h = path_plus(6, {{0, 2}, {5, 3}, {1, 4}});
    const auto rc = apply_rewrite(h, identity_path(6), {RuleId::rc_0, {3, 4}});
    CHECK(std::get<Cycle>(rc) == Cycle({2, 3, 5, 4, 1, 0}));
}

TEST_CASE("CTL absorbs an off-cycle neighbour")
{
    const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 1}});
    const OrientedPath q = apply_rewrite(g, Cycle({0, 1, 2}), {RuleId::ctl, {2, 3}});
    CHECK(q == OrientedPath({3, 1, 2, 0}));
    CHECK(enumerate_witnesses(g, Cycle({0, 1, 2}), RuleId::ctl).size() == 1);
}

TEST_CASE("preconditions name the failing check")
{
    const Graph g = path_plus(5, {});
    CHECK_THROWS_AS(apply_rewrite(g, identity_path(5), {RuleId::rt_a, {4}}), PreconditionError);
    CHECK_THROWS_AS(apply_rewrite(g, identity_path(5), {RuleId::rt_a, {2}}), PreconditionError);
    CHECK_THROWS_AS(apply_rewrite(g, identity_path(5), {RuleId::rt_a, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(apply_rewrite(g, identity_path(5), {RuleId::hp_1, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(apply_rewrite(g, Cycle({0, 1, 2}), {RuleId::ctl, {1, 3}}), PreconditionError);
    CHECK_THROWS_AS(apply_rewrite(g, OrientedPath({0, 2, 1}), {RuleId::rt_a, {3}}), PreconditionError);
    try {
        apply_rewrite(g, identity_path(5), {RuleId::rt_a, {4}});
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("not an edge") != std::string::npos);
    }
    CHECK(rewrite_defect(g, identity_path(5), {RuleId::rt_a, {4}}).has_value());
}

TEST_CASE("sec2 split on the Hamilton path of C6")
{
    const Graph c6 = cycle_graph(6);
    const OrientedPath p = identity_path(6);
    const NeighborSplit split = compute_neighbor_split(c6, p, SplitMode::sec2);
    CHECK(split.st.s + split.st.t == alpha_tilde_value(c6) + 1);
    CHECK(split_is_consistent(c6, p, split));
    // v1 ~ v6 here, and the split only ranges over v2..v5.
    CHECK_FALSE(split.endpoints_covered);

    // Tampering is noticed.
    NeighborSplit bad = split;
    bad.sets[0].second.insert(3);
    CHECK_FALSE(split_is_consistent(c6, p, bad));
}

TEST_CASE("missing thresholds raise")
{
    try {
        compute_neighbor_split(path_graph(5), identity_path(5), SplitMode::sec2, {2, 2});
        FAIL("expected threshold error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::threshold_missing);
    }
    CHECK_THROWS_AS(compute_neighbor_split(path_graph(5), identity_path(5), SplitMode::sec3_case1, {1, 1}),
                    PreconditionError);
}

TEST_CASE("searched case-1 and case-2 instances")
{
    std::mt19937_64 rng(3);
    bool case1_seen = false, hp1_seen = false, case2_seen = false;
    for (int round = 0; round < 20000 && !(case1_seen && hp1_seen && case2_seen); ++round) {
        const int k = 3;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.5);
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (coin(rng) && !(i == k - 1 && j == k))
                    edges.emplace_back(i, j);
        for (int i = 0; i + 1 < 7; ++i)
            if (i != k - 1)
                edges.emplace_back(i, i + 1);
        const Graph g = Graph::from_edges(7, edges);
        const OrientedPath p = identity_path(7, k);
        const StSplit st = alpha_tilde_split(g);
        NeighborSplit split;
        try {
            split = compute_sec3_split(g, p, st);
        } catch (const Error&) {
            continue;
        }
        REQUIRE(split_is_consistent(g, p, split));
        // Witnesses are exactly the crossings whose remaining checks pass.
        const auto witnesses = split_witnesses(g, p, split);
        for (const RewriteRule& c : split_crossings(g, p, split)) {
            const bool listed = std::find(witnesses.begin(), witnesses.end(), c) != witnesses.end();
            REQUIRE(listed == !rewrite_defect(g, p, c).has_value());
        }
        for (const RewriteRule& w : witnesses) {
            const auto q = std::get<OrientedPath>(apply_rewrite(g, p, w));
            REQUIRE_FALSE(path_defect(g, q).has_value());
            REQUIRE_FALSE(q.virtual_position().has_value());
            hp1_seen = hp1_seen || w.id == RuleId::hp_1;
        }
        if (split.mode == SplitMode::sec3_case1 && split.r == 2) {
            CHECK(split.get("S1").size() == st.s);
            case1_seen = true;
        }
        case2_seen = case2_seen || split.mode == SplitMode::sec3_case2;
    }
    CHECK(case1_seen);
    CHECK(hp1_seen);
    CHECK(case2_seen);
}

TEST_CASE("rewrite soundness over 10^5 searched witnesses")
{
    property::RewriteProperty run(20240611);
    const property::RewriteRun r = run.run(100'000, 200);
    if (!r.failures.empty())
        MESSAGE(r.failures.front());
    CHECK(r.cases >= 100'000);
    CHECK(r.min_rule_count() >= 200);
    CHECK(r.invalid == 0);
    CHECK(r.rejected_bad == 0);
    CHECK(r.rejected_ok > 0);
}
