// hamfan command-line front end. Talks to the library only through the C API.
#include "hamfan/hamfan.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
    hamfan_status status;
    std::string message;
};

int exit_code(hamfan_status s)
{
    switch (s) {
    case HAMFAN_OK:
        return kExitOk;
    case HAMFAN_ERR_PRECONDITION:
    case HAMFAN_ERR_INTERNAL:
        return kExitViolation;
    default:
        return kExitUsage;
    }
}

void check(hamfan_status s)
{
    if (s != HAMFAN_OK)
        throw Failure{s, hamfan_last_error()};
}

struct GraphDeleter {
    void operator()(hamfan_graph* g) const { hamfan_graph_free(g); }
};
using GraphPtr = std::unique_ptr<hamfan_graph, GraphDeleter>;

// Owns a library string and prints it as one output line.
class Text {
public:
    ~Text() { hamfan_string_free(s_); }
    char** out() { return &s_; }
    const char* get() const { return s_ ? s_ : ""; }

private:
    char* s_ = nullptr;
};

struct InputOptions {
    std::string file = "-";
    std::string format = "auto";
};

void add_input(CLI::App* app, InputOptions& in)
{
    app->add_option("-i,--input", in.file, "graph file (graph6 or edge list); '-' reads standard input")
        ->capture_default_str();
    app->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edge-list"}))
        ->capture_default_str();
}

std::string read_all(const std::string& file)
{
    if (file == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(file);
    if (!in)
        throw Failure{HAMFAN_ERR_IO, "cannot open '" + file + "'"};
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphPtr load_graph(const InputOptions& in)
{
    const std::string text = read_all(in.file);
    hamfan_graph* g = nullptr;
    if (in.format == "graph6")
        check(hamfan_graph_from_graph6(text.c_str(), &g));
    else if (in.format == "edge-list")
        check(hamfan_graph_from_edge_list(text.c_str(), &g));
    else
        check(hamfan_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
}

std::vector<int> parse_ints(const std::string& text, const char* what)
{
    std::vector<int> out;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',')
            c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Failure{HAMFAN_ERR_ARGUMENT, std::string(what) + ": '" + tok + "' is not an integer"};
        }
    }
    return out;
}

hamfan_ham_mode ham_mode(const std::string& m)
{
    if (m == "path")
        return HAMFAN_HAM_PATH;
    if (m == "connected")
        return HAMFAN_HAM_CONNECTED;
    return HAMFAN_HAM_CYCLE;
}

struct CorpusOptions {
    int all_labeled = 0;
    std::string graph6_file;
    std::uint64_t random_count = 0;
    int order = 0;
    double edge_prob = 0.5;
    std::uint64_t seed = 1;
    int workers = 1;
};

void add_corpus(CLI::App* app, CorpusOptions& c)
{
    auto* all = app->add_option("--all-labeled", c.all_labeled, "every labeled graph on 1..N vertices (N <= 7)");
    auto* file = app->add_option("--graph6-file", c.graph6_file, "one graph6 string per line ('-' for standard input)");
    auto* rnd = app->add_option("--random", c.random_count, "COUNT seeded G(n, p) graphs");
    all->excludes(file, rnd);
    file->excludes(rnd);
    app->add_option("-n,--order", c.order, "order of the random graphs");
    app->add_option("-p,--edge-prob", c.edge_prob, "edge probability of the random graphs")->capture_default_str();
    app->add_option("--seed", c.seed, "random seed")->capture_default_str();
    app->add_option("-j,--workers", c.workers, "worker threads (HAMFAN_WORKERS overrides)")->capture_default_str();
}

void fill_config(const CLI::App* app, const CorpusOptions& c, hamfan_run_config& cfg, std::string& text_store)
{
    hamfan_run_config_init(&cfg);
    if (app->count("--all-labeled")) {
        cfg.source = HAMFAN_SOURCE_ALL_LABELED;
        cfg.order = c.all_labeled;
    } else if (app->count("--graph6-file")) {
        if (c.graph6_file == "-") {
            text_store = read_all("-");
            cfg.source = HAMFAN_SOURCE_GRAPH6_TEXT;
            cfg.text = text_store.c_str();
        } else {
            cfg.source = HAMFAN_SOURCE_GRAPH6_FILE;
            cfg.path = c.graph6_file.c_str();
        }
    } else if (app->count("--random")) {
        if (!app->count("--order"))
            throw Failure{HAMFAN_ERR_ARGUMENT, "--random needs --order"};
        cfg.source = HAMFAN_SOURCE_RANDOM;
        cfg.count = c.random_count;
        cfg.order = c.order;
        cfg.edge_prob = c.edge_prob;
        cfg.seed = c.seed;
    } else {
        throw Failure{HAMFAN_ERR_ARGUMENT, "choose a corpus: --all-labeled N, --graph6-file FILE or --random COUNT"};
    }
    cfg.workers = c.workers;
}

struct RecordWriter {
    std::ostream* out;
    bool all;
};

void write_record(const char* json, void* user)
{
    auto* w = static_cast<RecordWriter*>(user);
    if (w->all || std::strstr(json, "\"verdict\":\"COUNTEREXAMPLE\""))
        *w->out << json << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bipartite independence number, Fan-type hamiltonicity conditions and Hamilton constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hamfan_version()));

    // alpha
    InputOptions alpha_in;
    auto* alpha = app.add_subcommand("alpha", "bipartite independence number with witness split and holes");
    add_input(alpha, alpha_in);

    // check
    InputOptions check_in;
    std::vector<std::string> conditions;
    auto* check_cmd = app.add_subcommand("check", "evaluate degree conditions");
    add_input(check_cmd, check_in);
    check_cmd
        ->add_option("-c,--condition", conditions,
                     "condition id, repeatable: dirac ore fan_classic mcdiarmid_yolov zhou_et_al li_liu_ham "
                     "li_liu_hc thm-ham thm-hc admissible v_star (default: all)")
        ->delimiter(',');

    // hamilton
    InputOptions ham_in;
    std::string ham_mode_name = "cycle";
    int ham_x = -1, ham_y = -1;
    auto* ham = app.add_subcommand("hamilton", "exact Hamilton cycle / path / connectedness");
    add_input(ham, ham_in);
    ham->add_option("-m,--mode", ham_mode_name, "cycle, path or connected")
        ->check(CLI::IsMember({"cycle", "path", "connected"}))
        ->capture_default_str();
    ham->add_option("-x", ham_x, "path start");
    ham->add_option("-y", ham_y, "path end");

    // construct
    InputOptions con_in;
    std::string con_mode_name = "cycle";
    int con_x = -1, con_y = -1;
    auto* con = app.add_subcommand("construct", "build a certificate with the rewrite rules and print the trace");
    add_input(con, con_in);
    con->add_option("-m,--mode", con_mode_name, "cycle or path")
        ->check(CLI::IsMember({"cycle", "path"}))
        ->capture_default_str();
    con->add_option("-x", con_x, "path start");
    con->add_option("-y", con_y, "path end");

    // rewrite
    InputOptions rw_in;
    std::string rw_rule, rw_path, rw_cycle, rw_witness, rw_split;
    int rw_k = 0;
    bool rw_list = false;
    auto* rw = app.add_subcommand("rewrite", "apply one rewrite rule, list its witnesses, or show a neighbour split");
    add_input(rw, rw_in);
    rw->add_option("-r,--rule", rw_rule, "RT-A RT-B RC-0 RC-1 RC-2 CTL HP-1 .. HP-8");
    auto* rw_path_opt = rw->add_option("--path", rw_path, "vertex sequence, e.g. 0,1,2,3");
    auto* rw_cycle_opt = rw->add_option("--cycle", rw_cycle, "cycle vertex sequence (CTL)");
    rw_path_opt->excludes(rw_cycle_opt);
    rw->add_option("-w,--witness", rw_witness, "witness indices, 1-based positions");
    rw->add_option("-k,--virtual-k", rw_k, "position k of the virtual adjacency v_k v_{k+1}");
    rw->add_flag("--list", rw_list, "list every witness for --rule instead of applying one");
    rw->add_option("--split", rw_split, "neighbour split mode instead of a rule")
        ->check(CLI::IsMember({"sec2", "sec3", "sec3_case1", "sec3_case2"}));

    // extremal
    std::string family;
    int param = 0;
    bool ext_verify = false;
    auto* ext = app.add_subcommand("extremal", "tightness families g1, g2, g3");
    ext->add_option("-f,--family", family, "g1, g2 or g3")->required();
    ext->add_option("--param", param, "n for g1/g2, a for g3")->required();
    ext->add_flag("--verify", ext_verify, "evaluate the family's claimed properties");

    // verify
    CorpusOptions ver_opts;
    std::vector<std::string> ver_checks;
    bool ver_construct = false, ver_lemmas = false;
    std::string ver_records = "counterexamples", ver_output;
    auto* ver = app.add_subcommand("verify", "check both theorems over a corpus; JSON lines then a summary object");
    add_corpus(ver, ver_opts);
    ver->add_option("--check", ver_checks, "thm-ham and/or thm-hc (default: both)")
        ->check(CLI::IsMember({"thm-ham", "thm-hc"}))
        ->delimiter(',');
    ver->add_flag("--construct", ver_construct, "run and replay the constructive drivers");
    ver->add_flag("--lemmas", ver_lemmas, "run the executable lemma checks");
    ver->add_option("--records", ver_records, "per-graph lines to emit")
        ->check(CLI::IsMember({"none", "counterexamples", "all"}))
        ->capture_default_str();
    ver->add_option("-o,--output", ver_output, "write the report here instead of standard output");

    // compare
    CorpusOptions cmp_opts;
    std::string cmp_output;
    auto* cmp = app.add_subcommand("compare", "hypothesis counts and implications against prior conditions");
    add_corpus(cmp, cmp_opts);
    cmp->add_option("-o,--output", cmp_output, "write the report here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Text text;
        int flag = 0;
        if (alpha->parsed()) {
            auto g = load_graph(alpha_in);
            check(hamfan_alpha_json(g.get(), text.out()));
            std::cout << text.get() << '\n';
            return kExitOk;
        }
        if (check_cmd->parsed()) {
            auto g = load_graph(check_in);
            std::string list;
            for (const auto& c : conditions)
                list += (list.empty() ? "" : ",") + c;
            check(hamfan_check_json(g.get(), list.c_str(), text.out(), &flag));
            std::cout << text.get() << '\n';
            return kExitOk;
        }
        if (ham->parsed()) {
            const hamfan_ham_mode mode = ham_mode(ham_mode_name);
            if (mode == HAMFAN_HAM_PATH && (ham->count("-x") == 0 || ham->count("-y") == 0))
                throw Failure{HAMFAN_ERR_ARGUMENT, "--mode path needs -x and -y"};
            auto g = load_graph(ham_in);
            check(hamfan_hamilton_json(g.get(), mode, ham_x, ham_y, text.out(), &flag));
            std::cout << text.get() << '\n';
            return kExitOk;
        }
        if (con->parsed()) {
            const hamfan_ham_mode mode = ham_mode(con_mode_name);
            if (mode == HAMFAN_HAM_PATH && (con->count("-x") == 0 || con->count("-y") == 0))
                throw Failure{HAMFAN_ERR_ARGUMENT, "--mode path needs -x and -y"};
            auto g = load_graph(con_in);
            check(hamfan_construct_json(g.get(), mode, con_x, con_y, text.out(), &flag));
            std::cout << text.get() << '\n';
            return flag ? kExitOk : kExitViolation;
        }
        if (rw->parsed()) {
            const bool is_cycle = rw->count("--cycle") > 0;
            if (!is_cycle && rw->count("--path") == 0)
                throw Failure{HAMFAN_ERR_ARGUMENT, "give the input sequence with --path or --cycle"};
            const std::vector<int> seq = parse_ints(is_cycle ? rw_cycle : rw_path, "sequence");
            auto g = load_graph(rw_in);
            if (!rw_split.empty()) {
                if (is_cycle)
                    throw Failure{HAMFAN_ERR_ARGUMENT, "--split needs --path"};
                check(hamfan_split_json(g.get(), rw_split.c_str(), seq.data(), seq.size(), rw_k, text.out()));
            } else if (rw_rule.empty()) {
                throw Failure{HAMFAN_ERR_ARGUMENT, "give --rule (or --split)"};
            } else if (rw_list) {
                check(hamfan_witnesses_json(g.get(), rw_rule.c_str(), seq.data(), seq.size(), is_cycle, rw_k,
                                            text.out()));
            } else {
                const std::vector<int> witness = parse_ints(rw_witness, "witness");
                check(hamfan_rewrite_json(g.get(), rw_rule.c_str(), seq.data(), seq.size(), is_cycle,
                                          witness.data(), witness.size(), rw_k, text.out()));
            }
            std::cout << text.get() << '\n';
            return kExitOk;
        }
        if (ext->parsed()) {
            hamfan_graph* raw = nullptr;
            check(hamfan_extremal_graph(family.c_str(), param, &raw));
            GraphPtr g(raw);
            Text g6;
            check(hamfan_graph_to_graph6(g.get(), g6.out()));
            std::string out = std::string("{\"family\":\"") + family + "\",\"parameter\":" + std::to_string(param)
                              + ",\"graph6\":\"" + g6.get() + "\",\"order\":"
                              + std::to_string(hamfan_graph_order(g.get()));
            int pass = 1;
            if (ext_verify) {
                check(hamfan_extremal_verify_json(family.c_str(), param, text.out(), &pass));
                out += std::string(",\"verification\":") + text.get();
            }
            std::cout << out << "}\n";
            return pass ? kExitOk : kExitViolation;
        }
        if (ver->parsed() || cmp->parsed()) {
            const bool verify = ver->parsed();
            hamfan_run_config cfg;
            std::string stdin_text;
            fill_config(verify ? ver : cmp, verify ? ver_opts : cmp_opts, cfg, stdin_text);
            const std::string& output = verify ? ver_output : cmp_output;
            std::ofstream file;
            if (!output.empty()) {
                file.open(output);
                if (!file)
                    throw Failure{HAMFAN_ERR_IO, "cannot write '" + output + "'"};
            }
            std::ostream& out = output.empty() ? std::cout : file;
            RecordWriter writer{&out, ver_records == "all"};
            if (verify) {
                if (!ver_checks.empty()) {
                    cfg.check_ham = 0;
                    cfg.check_hc = 0;
                    for (const auto& c : ver_checks)
                        (c == "thm-ham" ? cfg.check_ham : cfg.check_hc) = 1;
                }
                cfg.construct = ver_construct;
                cfg.lemmas = ver_lemmas;
                if (ver_records != "none") {
                    cfg.sink = write_record;
                    cfg.sink_user = &writer;
                }
                std::cerr << "workers: " << hamfan_resolve_workers(&cfg) << '\n';
                check(hamfan_verify_json(&cfg, text.out(), &flag));
            } else {
                cfg.check_ham = 0;
                cfg.check_hc = 0;
                check(hamfan_compare_json(&cfg, text.out(), &flag));
            }
            out << text.get() << '\n';
            return flag ? kExitViolation : kExitOk;
        }
    } catch (const Failure& f) {
        std::cerr << "error (" << hamfan_status_name(f.status) << "): " << f.message << '\n';
        return exit_code(f.status);
    }
    return kExitUsage;
}
