#include "harness.hpp"

#include "bipartite_hole.hpp"
#include "conditions.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "ham_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace hamfan {

namespace {

constexpr std::size_t kStoredViolations = 50;
constexpr std::size_t kStoredGraphs = 50;
constexpr std::uint64_t kBlockSize = 2048;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Edge> pair_order(int n)
{
    std::vector<Edge> out;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            out.emplace_back(i, j);
    return out;
}

} // namespace

std::uint64_t labeled_graph_count(int n)
{
    if (n < 1)
        throw Error(Errc::out_of_range, "order must be at least 1");
    if (n > kMaxLabeledOrder)
        throw Error(Errc::too_large, "labeled enumeration is limited to n <= " + std::to_string(kMaxLabeledOrder));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask)
{
    const auto pairs = pair_order(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
            edges.push_back(pairs[i]);
    return Graph::from_edges(n, edges);
}

void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& visit)
{
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(labeled_graph(n, mask));
}

Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t index)
{
    if (n < 1 || n > kMaxVertices)
        throw Error(Errc::out_of_range, "random graph order out of range");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(Errc::out_of_range, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (const auto& e : pair_order(n))
        if (coin(rng))
            edges.push_back(e);
    return Graph::from_edges(n, edges);
}

int resolve_workers(const RunConfig& cfg)
{
    int workers = cfg.workers;
    if (const char* env = std::getenv("HAMFAN_WORKERS")) {
        try {
            workers = std::stoi(env);
        } catch (const std::exception&) {
            throw Error(Errc::invalid_argument, "HAMFAN_WORKERS must be an integer");
        }
    }
    return std::max(1, workers);
}

bool CorpusSummary::property_violated() const
{
    if (counterexamples > 0 || construct.invalid > 0)
        return true;
    for (const auto& [key, value] : lemmas.counts)
        if (key.rfind("violation.", 0) == 0 && value > 0)
            return true;
    return false;
}

namespace {

// --- corpus sources --------------------------------------------------------------

class Source {
public:
    explicit Source(const RunConfig& cfg) : cfg_(cfg)
    {
        switch (cfg.source) {
        case SourceKind::all_labeled:
            labeled_graph_count(cfg.order);
            for (int k = 1; k <= cfg.order; ++k) {
                offsets_.push_back(total_);
                total_ += labeled_graph_count(k);
            }
            break;
        case SourceKind::random:
            if (cfg.order < 1 || cfg.order > kMaxCorpusOrder)
                throw Error(Errc::too_large, "random graph order must lie in 1.." + std::to_string(kMaxCorpusOrder));
            if (!(cfg.edge_prob >= 0.0 && cfg.edge_prob <= 1.0))
                throw Error(Errc::out_of_range, "edge probability must lie in [0, 1]");
            total_ = cfg.count;
            break;
        case SourceKind::graph6_file: {
            std::ifstream in(cfg.path);
            if (!in)
                throw Error(Errc::io, "cannot open '" + cfg.path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            load_lines(buf.str());
            break;
        }
        case SourceKind::graph6_text:
            load_lines(cfg.text);
            break;
        }
    }

    std::uint64_t size() const { return total_; }

    Graph at(std::uint64_t i) const
    {
        switch (cfg_.source) {
        case SourceKind::all_labeled: {
            int k = static_cast<int>(offsets_.size());
            while (offsets_[k - 1] > i)
                --k;
            return labeled_graph(k, i - offsets_[k - 1]);
        }
        case SourceKind::random:
            return random_graph(cfg_.order, cfg_.edge_prob, cfg_.seed, i);
        default:
            return graphs_[i];
        }
    }

private:
    void load_lines(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            Graph g;
            try {
                g = parse_graph6(line);
            } catch (const ParseError& e) {
                throw ParseError(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
            }
            if (g.order() > kMaxCorpusOrder)
                throw Error(Errc::too_large, "line " + std::to_string(line_no) + ": order " + std::to_string(g.order())
                                                 + " exceeds " + std::to_string(kMaxCorpusOrder));
            graphs_.push_back(g);
        }
        total_ = graphs_.size();
    }

    const RunConfig& cfg_;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> offsets_; ///< first index of each order
    std::vector<Graph> graphs_;
};

// --- per-graph evaluation --------------------------------------------------------

struct Evaluation {
    VerificationRecord record;
    std::array<ConditionReport, std::size(kAllConditions)> reports;
    bool fan_alpha = false;
    bool admissible = false;
    int min_degree = 0;
    ConstructStats construct;
    LemmaStats lemmas;
};

void run_constructions(const Graph& g, bool cycle, bool paths, Evaluation& ev)
{
    TraceSummary summary;
    auto tally = [&](const ConstructionTrace& trace) {
        for (const auto& [rule, count] : trace.rule_counts()) {
            summary.rule_counts[rule] += count;
            ev.construct.rule_counts[rule] += count;
        }
    };
    auto invalid = [&]() {
        ++ev.construct.invalid;
        ev.construct.invalid_graphs.push_back(ev.record.graph_id);
    };
    if (cycle) {
        if (auto built = drive_hamilton_cycle(g)) {
            ++ev.construct.cycles;
            summary.cycle_built = true;
            summary.cycle_fallback = built->trace.fallback;
            ev.construct.cycle_fallbacks += built->trace.fallback;
            tally(built->trace);
            try {
                if (!(replay_trace(g, built->trace) == built->certificate))
                    invalid();
            } catch (const Error&) {
                invalid();
            }
        }
    }
    if (paths) {
        const VirtualChain chain = build_virtual_chain(g);
        for (int x = 0; x < g.order(); ++x)
            for (int y = x + 1; y < g.order(); ++y) {
                auto built = drive_hamilton_path(g, chain, x, y);
                if (!built)
                    continue;
                ++ev.construct.paths;
                ++summary.paths_built;
                summary.path_fallbacks += built->trace.fallback;
                ev.construct.path_fallbacks += built->trace.fallback;
                tally(built->trace);
                try {
                    if (!(replay_trace(g, built->trace, Edge{x, y}) == built->certificate))
                        invalid();
                } catch (const Error&) {
                    invalid();
                }
            }
    }
    ev.record.trace = std::move(summary);
}

Evaluation evaluate(const Graph& g, const RunConfig& cfg)
{
    Evaluation ev;
    VerificationRecord& rec = ev.record;
    const int n = g.order();
    rec.graph_id = emit_graph6(g);
    rec.order = n;

    const GraphFacts facts = compute_facts(g);
    rec.alpha_tilde = facts.alpha_tilde;
    rec.connectivity = facts.connectivity;
    ev.min_degree = g.min_degree();

    for (std::size_t i = 0; i < std::size(kAllConditions); ++i) {
        ev.reports[i] = evaluate_condition(g, kAllConditions[i], facts);
        rec.hypotheses.emplace_back(ev.reports[i].condition_id, ev.reports[i].all_hold());
    }
    auto report = [&](ConditionId id) -> const ConditionReport& {
        for (std::size_t i = 0; i < std::size(kAllConditions); ++i)
            if (kAllConditions[i] == id)
                return ev.reports[i];
        throw Error(Errc::internal, "condition missing");
    };
    ev.fan_alpha = report(ConditionId::thm_ham).holds;
    ev.admissible = report(ConditionId::thm_hc).holds;
    rec.hypotheses.emplace_back("admissible", ev.admissible);

    const bool ham_hyp = report(ConditionId::thm_ham).all_hold();
    const bool hc_hyp = report(ConditionId::thm_hc).all_hold();

    if (cfg.check_ham)
        rec.hamiltonian = n >= 3 && facts.connectivity >= 2 && hamilton_cycle(g).has_value();
    if (cfg.check_hc) {
        if (n <= 3 || facts.connectivity >= 3)
            rec.hamiltonian_connected = is_hamiltonian_connected(g).connected;
        else
            rec.hamiltonian_connected = false;
    }
    rec.counterexample = (cfg.check_ham && ham_hyp && !*rec.hamiltonian)
                         || (cfg.check_hc && hc_hyp && !*rec.hamiltonian_connected);

    if (cfg.construct)
        run_constructions(g, cfg.check_ham && ham_hyp, cfg.check_hc && hc_hyp, ev);
    if (cfg.lemmas) {
        if (ham_hyp)
            check_endpoint_lemmas(g, ev.lemmas, cfg.lemma_limits);
        if (hc_hyp)
            check_virtual_lemmas(g, ev.lemmas, cfg.lemma_limits);
    }
    return ev;
}

// --- aggregation -----------------------------------------------------------------

constexpr const char* kImplicationNames[] = {
    "li_liu_ham degree => fan_tilde(alpha)",
    "li_liu_hc degree => admissible",
    "mcdiarmid_yolov degree => fan_tilde(alpha)",
    "zhou_et_al degree => admissible",
    "dirac degree => alpha_tilde <= min degree",
    "li_liu_ham hypothesis => thm-ham hypothesis",
    "li_liu_hc hypothesis => thm-hc hypothesis",
};

CorpusSummary empty_summary()
{
    CorpusSummary s;
    for (const char* name : kImplicationNames)
        s.implications.push_back(Implication{name});
    return s;
}

void tally_implication(Implication& imp, bool premise, bool conclusion)
{
    imp.premise += premise;
    imp.conclusion += conclusion;
    imp.violations += premise && !conclusion;
    imp.strict += conclusion && !premise;
}

void accumulate(CorpusSummary& s, const Evaluation& ev, const RunConfig& cfg)
{
    const VerificationRecord& rec = ev.record;
    ++s.graphs;
    ++s.graphs_by_order[rec.order];
    auto find = [&](ConditionId id) -> const ConditionReport& {
        for (std::size_t i = 0; i < std::size(kAllConditions); ++i)
            if (kAllConditions[i] == id)
                return ev.reports[i];
        throw Error(Errc::internal, "condition missing");
    };
    for (const auto& r : ev.reports) {
        s.degree_condition_holds[r.condition_id] += r.holds;
        s.hypothesis_holds[r.condition_id] += r.all_hold();
    }
    s.degree_condition_holds["admissible"] += ev.admissible;

    const bool ham_hyp = find(ConditionId::thm_ham).all_hold();
    const bool hc_hyp = find(ConditionId::thm_hc).all_hold();
    s.ham_hypothesis += ham_hyp;
    s.hc_hypothesis += hc_hyp;
    if (cfg.check_ham)
        s.hamiltonian += *rec.hamiltonian;
    if (cfg.check_hc)
        s.hamiltonian_connected += *rec.hamiltonian_connected;

    auto& imp = s.implications;
    tally_implication(imp[0], find(ConditionId::li_liu_ham).holds, ev.fan_alpha);
    tally_implication(imp[1], find(ConditionId::li_liu_hc).holds, ev.admissible);
    tally_implication(imp[2], find(ConditionId::mcdiarmid_yolov).holds, ev.fan_alpha);
    tally_implication(imp[3], find(ConditionId::zhou_et_al).holds, ev.admissible);
    tally_implication(imp[4], find(ConditionId::dirac).holds, rec.alpha_tilde <= ev.min_degree);
    tally_implication(imp[5], find(ConditionId::li_liu_ham).all_hold(), ham_hyp);
    tally_implication(imp[6], find(ConditionId::li_liu_hc).all_hold(), hc_hyp);

    s.construct.cycles += ev.construct.cycles;
    s.construct.cycle_fallbacks += ev.construct.cycle_fallbacks;
    s.construct.paths += ev.construct.paths;
    s.construct.path_fallbacks += ev.construct.path_fallbacks;
    s.construct.invalid += ev.construct.invalid;
    for (const auto& [rule, count] : ev.construct.rule_counts)
        s.construct.rule_counts[rule] += count;
    for (const auto& g6 : ev.construct.invalid_graphs)
        if (s.construct.invalid_graphs.size() < kStoredGraphs)
            s.construct.invalid_graphs.push_back(g6);
    for (const auto& [key, value] : ev.lemmas.counts)
        s.lemmas.counts[key] += value;
    for (const auto& v : ev.lemmas.violations)
        if (s.lemmas.violations.size() < kStoredViolations)
            s.lemmas.violations.push_back(v);
}

void merge(CorpusSummary& into, const CorpusSummary& from)
{
    into.graphs += from.graphs;
    for (const auto& [k, v] : from.graphs_by_order)
        into.graphs_by_order[k] += v;
    for (const auto& [k, v] : from.degree_condition_holds)
        into.degree_condition_holds[k] += v;
    for (const auto& [k, v] : from.hypothesis_holds)
        into.hypothesis_holds[k] += v;
    into.ham_hypothesis += from.ham_hypothesis;
    into.hc_hypothesis += from.hc_hypothesis;
    into.hamiltonian += from.hamiltonian;
    into.hamiltonian_connected += from.hamiltonian_connected;
    for (std::size_t i = 0; i < into.implications.size(); ++i) {
        into.implications[i].premise += from.implications[i].premise;
        into.implications[i].conclusion += from.implications[i].conclusion;
        into.implications[i].violations += from.implications[i].violations;
        into.implications[i].strict += from.implications[i].strict;
    }
    into.construct.cycles += from.construct.cycles;
    into.construct.cycle_fallbacks += from.construct.cycle_fallbacks;
    into.construct.paths += from.construct.paths;
    into.construct.path_fallbacks += from.construct.path_fallbacks;
    into.construct.invalid += from.construct.invalid;
    for (const auto& [k, v] : from.construct.rule_counts)
        into.construct.rule_counts[k] += v;
    for (const auto& g6 : from.construct.invalid_graphs)
        if (into.construct.invalid_graphs.size() < kStoredGraphs)
            into.construct.invalid_graphs.push_back(g6);
    for (const auto& [k, v] : from.lemmas.counts)
        into.lemmas.counts[k] += v;
    for (const auto& v : from.lemmas.violations)
        if (into.lemmas.violations.size() < kStoredViolations)
            into.lemmas.violations.push_back(v);
}

struct BlockResult {
    CorpusSummary summary = empty_summary();
    std::vector<VerificationRecord> records;
    std::vector<std::string> candidates;
};

BlockResult run_block(const Source& src, const RunConfig& cfg, std::uint64_t begin, std::uint64_t end, bool keep)
{
    BlockResult out;
    for (std::uint64_t i = begin; i < end; ++i) {
        Evaluation ev = evaluate(src.at(i), cfg);
        ev.record.index = i;
        accumulate(out.summary, ev, cfg);
        if (ev.record.counterexample)
            out.candidates.push_back(ev.record.graph_id);
        if (keep)
            out.records.push_back(std::move(ev.record));
    }
    return out;
}

// Exact re-check with the unfiltered solvers.
bool confirm_counterexample(const std::string& graph6, const RunConfig& cfg)
{
    const Graph g = parse_graph6(graph6);
    if (cfg.check_ham && theorem_ham_hypothesis(g) && !hamilton_cycle(g))
        return true;
    return cfg.check_hc && theorem_hc_hypothesis(g) && !is_hamiltonian_connected(g).connected;
}

} // namespace

VerificationRecord verify_graph(const Graph& g, const RunConfig& cfg)
{
    return evaluate(g, cfg).record;
}

CorpusSummary verify_corpus(const RunConfig& cfg, const std::function<void(const VerificationRecord&)>& sink)
{
    const Source src(cfg);
    const int workers = resolve_workers(cfg);
    const bool keep = static_cast<bool>(sink);
    const std::uint64_t total = src.size();
    const std::uint64_t blocks = (total + kBlockSize - 1) / kBlockSize;

    CorpusSummary summary = empty_summary();
    summary.workers = workers;
    auto absorb = [&](BlockResult& block) {
        merge(summary, block.summary);
        std::vector<std::string> confirmed;
        for (const auto& g6 : block.candidates) {
            if (confirm_counterexample(g6, cfg)) {
                ++summary.counterexamples;
                if (summary.counterexample_graphs.size() < kStoredGraphs)
                    summary.counterexample_graphs.push_back(g6);
                confirmed.push_back(g6);
            } else {
                ++summary.rejected_candidates;
            }
        }
        for (auto& rec : block.records) {
            if (rec.counterexample)
                rec.counterexample = std::find(confirmed.begin(), confirmed.end(), rec.graph_id) != confirmed.end();
            sink(rec);
        }
    };
    auto bounds = [&](std::uint64_t b) {
        return std::pair{b * kBlockSize, std::min(total, (b + 1) * kBlockSize)};
    };

    if (workers == 1 || blocks <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) {
            const auto [begin, end] = bounds(b);
            BlockResult block = run_block(src, cfg, begin, end, keep);
            absorb(block);
        }
        return summary;
    }

    std::vector<std::optional<BlockResult>> slots(blocks);
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr failure;

    auto work = [&]() {
        for (;;) {
            const std::uint64_t b = next++;
            if (b >= blocks || abort)
                return;
            try {
                const auto [begin, end] = bounds(b);
                BlockResult block = run_block(src, cfg, begin, end, keep);
                std::lock_guard lock(mu);
                slots[b] = std::move(block);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                abort = true;
            }
            ready.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(work);

    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::optional<BlockResult> block;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[b].has_value() || failure; });
            if (failure)
                break;
            block = std::move(slots[b]);
            slots[b].reset();
        }
        absorb(*block);
    }
    abort = true;
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

} // namespace hamfan
