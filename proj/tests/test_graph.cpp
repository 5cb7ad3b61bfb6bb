#include "errors.hpp"
#include "graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hamfan;

namespace {

ParseErrc parse_kind(std::string_view text, bool graph6 = true)
{
    try {
        if (graph6)
            parse_graph6(text);
        else
            parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for '" << text << "'");
    return ParseErrc::empty_input;
}

} // namespace

TEST_CASE("graph6 of small named graphs")
{
    CHECK(emit_graph6(edgeless_graph(3)) == "B?");
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(path_graph(2)) == "A_");
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(0)) == "?");

    const Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(k4.is_complete());
    CHECK(parse_graph6(">>graph6<<C~\n") == k4);
}

TEST_CASE("graph6 round trip over every graph with n <= 5 and at n = 63, 64")
{
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs(n))
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
    for (int n : {62, 63, 64}) {
        const Graph g = cycle_graph(n);
        const std::string text = emit_graph6(g);
        CHECK((n < 63 ? text[0] != '~' : text[0] == '~'));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 parse errors carry their kind")
{
    CHECK(parse_kind("") == ParseErrc::empty_input);
    CHECK(parse_kind(":Fa@x^") == ParseErrc::bad_header);
    CHECK(parse_kind("C") == ParseErrc::truncated);
    CHECK(parse_kind("C~~") == ParseErrc::trailing_data);
    CHECK(parse_kind("C\x7f") == ParseErrc::byte_out_of_range);
    CHECK(parse_kind("~?@@") == ParseErrc::too_many_vertices); // n = 65 in long form
    CHECK(parse_kind("~~??????") == ParseErrc::too_many_vertices);
    CHECK(parse_kind("~??}") == ParseErrc::bad_header); // long form for n = 62
}

TEST_CASE("edge list parsing and errors")
{
    const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list(emit_edge_list(petersen_graph())) == petersen_graph());
    CHECK(parse_edge_list("3 0") == edgeless_graph(3));

    CHECK(parse_kind("", false) == ParseErrc::empty_input);
    CHECK(parse_kind("3 1\n0 x", false) == ParseErrc::non_integer);
    CHECK(parse_kind("3 2\n0 1", false) == ParseErrc::truncated);
    CHECK(parse_kind("3 1\n0 3", false) == ParseErrc::vertex_out_of_range);
    CHECK(parse_kind("3 1\n1 1", false) == ParseErrc::self_loop);
    CHECK(parse_kind("3 1\n0 1\n1 2", false) == ParseErrc::trailing_data);
    CHECK(parse_kind("65 0", false) == ParseErrc::too_many_vertices);
}

TEST_CASE("format detection")
{
    CHECK(parse_graph_auto("3 0\n") == edgeless_graph(3));
    CHECK(parse_graph_auto("Bw\n") == complete_graph(3));
    CHECK_THROWS_AS(parse_graph_auto("  \n"), ParseError);
}

TEST_CASE("constructors")
{
    CHECK(complete_graph(5).size() == 10);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(cycle_graph(6).min_degree() == 2);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(complete_bipartite(2, 3).adjacent(0, 2));
    CHECK_FALSE(complete_bipartite(2, 3).adjacent(0, 1));

    const Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);

    CHECK(complement(complete_graph(4)) == edgeless_graph(4));
    const Graph j = join(complete_graph(2), edgeless_graph(3));
    CHECK(j.order() == 5);
    CHECK(j.size() == 1 + 6);
    CHECK_FALSE(j.adjacent(2, 3));
    const Graph u = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(u.size() == 2);
    CHECK_FALSE(is_connected(u));

    CHECK_THROWS_AS(Graph(65), Error);
    CHECK_THROWS_AS(complete_graph(3).with_edge(0, 3), Error);
    CHECK(edgeless_graph(3).with_edge(0, 2).adjacent(2, 0));
}

TEST_CASE("induced subgraph relabels in increasing order")
{
    const Graph c = cycle_graph(5);
    const Graph h = c.induced(VertexSet{0, 1, 2});
    CHECK(h == path_graph(3));
}

TEST_CASE("distances and distance-2 pairs")
{
    const Graph p = path_graph(5);
    CHECK(distance(p, 0, 4) == 4);
    CHECK(distance(p, 2, 2) == 0);
    CHECK_FALSE(distance(disjoint_union(Graph(1), Graph(1)), 0, 1).has_value());
    const auto pairs = distance2_nonadjacent_pairs(p);
    CHECK(pairs == std::vector<Edge>{{0, 2}, {1, 3}, {2, 4}});
    CHECK(distance2_nonadjacent_pairs(complete_graph(4)).empty());

    // Agrees with BFS distance on every graph of order 5.
    for (const Graph& g : oracle::all_graphs(5)) {
        std::vector<Edge> expected;
        for (int x = 0; x < 5; ++x)
            for (int y = x + 1; y < 5; ++y)
                if (distance(g, x, y) == 2)
                    expected.emplace_back(x, y);
        REQUIRE(distance2_nonadjacent_pairs(g) == expected);
    }
}

TEST_CASE("k-connectivity matches the Menger oracle on every graph with n <= 6")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            const int kappa = oracle::vertex_connectivity(g);
            for (int k = 1; k <= 4; ++k)
                REQUIRE_MESSAGE(is_k_connected(g, k) == (kappa >= k), emit_graph6(g) << " k=" << k);
            REQUIRE(connectivity_up_to(g, 3) == std::min(kappa, 3));
        }
}

TEST_CASE("connectivity conventions")
{
    CHECK(is_k_connected(complete_graph(4), 3));
    CHECK_FALSE(is_k_connected(complete_graph(4), 4));
    CHECK(is_k_connected(cycle_graph(5), 2));
    CHECK_FALSE(is_k_connected(cycle_graph(5), 3));
    CHECK(is_k_connected(petersen_graph(), 3));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_k_connected(Graph(1), 1));
}
