// Exercises the shared library through its C header only.
#include <hamfan/hamfan.h>

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

using nlohmann::json;

namespace {

// Takes ownership of a library string.
json take(char* s)
{
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    hamfan_string_free(s);
    return j;
}

hamfan_graph* parse(const char* text)
{
    hamfan_graph* g = nullptr;
    REQUIRE(hamfan_graph_parse(text, &g) == HAMFAN_OK);
    return g;
}

} // namespace

TEST_CASE("graph handles")
{
    hamfan_graph* g = parse("4 3\n0 1\n1 2\n2 3\n");
    CHECK(hamfan_graph_order(g) == 4);
    CHECK(hamfan_graph_size(g) == 3);
    CHECK(hamfan_graph_adjacent(g, 1, 2) == 1);
    CHECK(hamfan_graph_adjacent(g, 0, 3) == 0);
    char* text = nullptr;
    REQUIRE(hamfan_graph_to_graph6(g, &text) == HAMFAN_OK);
    CHECK(std::string(text) == "Ch");
    hamfan_string_free(text);
    hamfan_graph_free(g);

    const int pairs[] = {0, 1, 1, 2, 2, 0};
    REQUIRE(hamfan_graph_from_edges(3, pairs, 3, &g) == HAMFAN_OK);
    CHECK(hamfan_graph_size(g) == 3);
    hamfan_graph_free(g);
    hamfan_graph_free(nullptr);
}

TEST_CASE("errors map to status codes")
{
    hamfan_graph* g = nullptr;
    CHECK(hamfan_graph_from_graph6("C", &g) == HAMFAN_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(hamfan_last_error()).find("truncated") != std::string::npos);
    CHECK(hamfan_graph_from_edge_list("3 1\n0 7", &g) == HAMFAN_ERR_PARSE);
    CHECK(hamfan_graph_parse(nullptr, &g) == HAMFAN_ERR_ARGUMENT);
    const int bad[] = {0, 5};
    CHECK(hamfan_graph_from_edges(3, bad, 1, &g) == HAMFAN_ERR_RANGE);
    CHECK(std::string(hamfan_status_name(HAMFAN_ERR_PRECONDITION)) == "precondition_failed");

    g = parse("C~");
    char* out = nullptr;
    CHECK(hamfan_check_json(g, "nonsense", &out, nullptr) == HAMFAN_ERR_ARGUMENT);
    CHECK(hamfan_hamilton_json(g, HAMFAN_HAM_PATH, 0, 9, &out, nullptr) == HAMFAN_ERR_RANGE);
    hamfan_graph_free(g);
    CHECK(hamfan_extremal_verify_json("g2", 9, &out, nullptr) == HAMFAN_ERR_TOO_LARGE);
}

TEST_CASE("alpha and conditions")
{
    hamfan_graph* g = parse("3 0");
    int value = 0;
    REQUIRE(hamfan_alpha_tilde(g, &value) == HAMFAN_OK);
    CHECK(value == 3);
    char* out = nullptr;
    REQUIRE(hamfan_alpha_json(g, &out) == HAMFAN_OK);
    CHECK(take(out)["value"] == 3);
    hamfan_graph_free(g);

    g = parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    int all = -1;
    REQUIRE(hamfan_check_json(g, "dirac,thm-ham,v_star", &out, &all) == HAMFAN_OK);
    const json j = take(out);
    CHECK(all == 0);
    CHECK(j["reports"].size() == 2);
    CHECK(j["reports"][0]["holds"] == false);
    CHECK(j.contains("v_star"));
    int conn = 0;
    REQUIRE(hamfan_connectivity(g, 3, &conn) == HAMFAN_OK);
    CHECK(conn == 2);
    hamfan_graph_free(g);
}

TEST_CASE("hamilton and construct")
{
    hamfan_graph* k5 = parse("D~{");
    char* out = nullptr;
    int found = 0;
    REQUIRE(hamfan_hamilton_json(k5, HAMFAN_HAM_CONNECTED, 0, 0, &out, &found) == HAMFAN_OK);
    CHECK(found == 1);
    CHECK(take(out)["paths"].size() == 10);

    int replayed = 0;
    REQUIRE(hamfan_construct_json(k5, HAMFAN_HAM_PATH, 1, 3, &out, &replayed) == HAMFAN_OK);
    const json c = take(out);
    CHECK(replayed == 1);
    CHECK(c["certificate"]["vertices"].front() == 1);
    CHECK(c["certificate"]["vertices"].back() == 3);
    hamfan_graph_free(k5);

    hamfan_graph* g1 = nullptr;
    REQUIRE(hamfan_extremal_graph("g1", 2, &g1) == HAMFAN_OK);
    CHECK(hamfan_construct_json(g1, HAMFAN_HAM_CYCLE, 0, 0, &out, nullptr) == HAMFAN_ERR_PRECONDITION);
    CHECK(std::string(hamfan_last_error()).rfind("hypothesis:", 0) == 0);
    hamfan_graph_free(g1);
}

TEST_CASE("rewrite entry points")
{
    hamfan_graph* g = parse("5 6\n0 1\n1 2\n2 3\n3 4\n0 3\n1 4\n");
    const int seq[] = {0, 1, 2, 3, 4};
    const int l[] = {4};
    char* out = nullptr;
    REQUIRE(hamfan_rewrite_json(g, "RT-A", seq, 5, 0, l, 1, 0, &out) == HAMFAN_OK);
    CHECK(take(out)["output"]["vertices"] == json({2, 1, 0, 3, 4}));
    const int bad[] = {3};
    CHECK(hamfan_rewrite_json(g, "RT-A", seq, 5, 0, bad, 1, 0, &out) == HAMFAN_ERR_PRECONDITION);
    REQUIRE(hamfan_witnesses_json(g, "RT-A", seq, 5, 0, 0, &out) == HAMFAN_OK);
    CHECK(take(out)["witnesses"] == json::array({json::array({4})}));
    CHECK(hamfan_rewrite_json(g, "XX", seq, 5, 0, l, 1, 0, &out) == HAMFAN_ERR_ARGUMENT);
    hamfan_graph_free(g);

    hamfan_graph* c6 = parse("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    const int p6[] = {0, 1, 2, 3, 4, 5};
    REQUIRE(hamfan_split_json(c6, "sec2", p6, 6, 0, &out) == HAMFAN_OK);
    CHECK(take(out)["consistent"] == true);
    hamfan_graph_free(c6);
}

TEST_CASE("extremal and corpus runs")
{
    char* out = nullptr;
    int all = 0;
    REQUIRE(hamfan_extremal_verify_json("g2", 3, &out, &all) == HAMFAN_OK);
    CHECK(all == 1);
    CHECK(take(out)["all_pass"] == true);

    hamfan_run_config cfg;
    hamfan_run_config_init(&cfg);
    cfg.order = 5;
    std::vector<std::string> records;
    cfg.sink = [](const char* rec, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(rec); };
    cfg.sink_user = &records;
    int violated = 1;
    REQUIRE(hamfan_verify_json(&cfg, &out, &violated) == HAMFAN_OK);
    const json s = take(out);
    CHECK(violated == 0);
    CHECK(s["graphs"] == 1099);
    CHECK(s["counterexamples"] == 0);
    CHECK(records.size() == 1099);
    CHECK(json::parse(records.front())["verdict"] == "consistent");

    cfg.sink = nullptr;
    REQUIRE(hamfan_compare_json(&cfg, &out, &violated) == HAMFAN_OK);
    CHECK(take(out).contains("implications"));

    cfg.source = HAMFAN_SOURCE_GRAPH6_TEXT;
    cfg.text = "C~\nbad!\n";
    CHECK(hamfan_verify_json(&cfg, &out, nullptr) == HAMFAN_ERR_PARSE);
    cfg.source = HAMFAN_SOURCE_ALL_LABELED;
    cfg.order = 9;
    CHECK(hamfan_verify_json(&cfg, &out, nullptr) == HAMFAN_ERR_TOO_LARGE);
    CHECK(hamfan_verify_json(nullptr, &out, nullptr) == HAMFAN_ERR_ARGUMENT);
}
