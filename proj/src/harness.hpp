#pragma once

#include "graph.hpp"
#include "lemmas.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamfan {

/// Labeled enumeration is capped at this order (2^21 graphs).
inline constexpr int kMaxLabeledOrder = 7;
/// Largest order accepted from graph6 corpora; exact solving beyond it is
/// outside the harness budget.
inline constexpr int kMaxCorpusOrder = 16;

/// Number of labeled graphs on n vertices. Throws Error(too_large) past
/// kMaxLabeledOrder.
std::uint64_t labeled_graph_count(int n);

/// The graph whose edge set is `mask`, bit i standing for the i-th pair in
/// graph6 order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Graph labeled_graph(int n, std::uint64_t mask);

/// Calls `visit` on every labeled graph on n vertices in mask order.
void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& visit);

/// The i-th graph of a seeded G(n, p) sequence. Each index draws from its
/// own generator seeded from (seed, i), so the sequence does not depend on
/// how it is partitioned across workers.
Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t index);

enum class SourceKind { all_labeled, graph6_file, graph6_text, random };

struct RunConfig {
    SourceKind source = SourceKind::all_labeled;
    int order = 0;          ///< all_labeled (every order 1..n) and random
    std::string path;       ///< graph6_file
    std::string text;       ///< graph6_text: one graph per line
    std::uint64_t count = 0; ///< random
    double edge_prob = 0.5; ///< random
    std::uint64_t seed = 1; ///< random

    bool check_ham = true;
    bool check_hc = true;
    bool construct = false; ///< run and replay the constructive drivers
    bool lemmas = false;    ///< run the executable lemma checks
    LemmaLimits lemma_limits;

    /// Worker threads; the HAMFAN_WORKERS environment variable overrides.
    int workers = 1;
};

struct TraceSummary {
    bool cycle_built = false;
    bool cycle_fallback = false;
    int paths_built = 0;
    int path_fallbacks = 0;
    std::map<std::string, int> rule_counts;
};

struct VerificationRecord {
    std::uint64_t index = 0;
    std::string graph_id; ///< graph6
    int order = 0;
    int alpha_tilde = 0;
    int connectivity = 0;
    /// Condition id (plus "admissible") -> hypothesis including side conditions.
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::optional<bool> hamiltonian;
    std::optional<bool> hamiltonian_connected;
    bool counterexample = false;
    std::optional<TraceSummary> trace;
};

/// Per-graph verification with the configured checks. Conclusions use two
/// sound shortcuts before exact search: a hamiltonian graph of order >= 3 is
/// 2-connected, and a hamiltonian-connected graph of order >= 4 is
/// 3-connected.
VerificationRecord verify_graph(const Graph& g, const RunConfig& cfg);

struct Implication {
    std::string name;
    long long premise = 0;
    long long conclusion = 0;
    long long violations = 0; ///< premise and not conclusion
    long long strict = 0;     ///< conclusion and not premise
};

struct ConstructStats {
    long long cycles = 0;
    long long cycle_fallbacks = 0;
    long long paths = 0;
    long long path_fallbacks = 0;
    long long invalid = 0; ///< certificates or traces that failed replay
    std::map<std::string, long long> rule_counts;
    std::vector<std::string> invalid_graphs;
};

struct CorpusSummary {
    long long graphs = 0;
    std::map<int, long long> graphs_by_order;
    std::map<std::string, long long> degree_condition_holds;
    std::map<std::string, long long> hypothesis_holds;
    long long ham_hypothesis = 0;
    long long hc_hypothesis = 0;
    long long hamiltonian = 0;
    long long hamiltonian_connected = 0;
    long long counterexamples = 0;
    /// Candidates that the single-threaded exact re-check did not confirm.
    long long rejected_candidates = 0;
    std::vector<std::string> counterexample_graphs;
    std::vector<Implication> implications;
    ConstructStats construct;
    LemmaStats lemmas;
    int workers = 1;

    /// Counterexamples, invalid constructions, or lemma violations.
    bool property_violated() const;
};

/// Runs the configured corpus. Blocks of graphs go to worker threads and are
/// merged in index order, so output is identical for any worker count.
/// `sink`, if given, receives every record in index order.
CorpusSummary verify_corpus(const RunConfig& cfg,
                            const std::function<void(const VerificationRecord&)>& sink = {});

/// Effective worker count for cfg (environment override applied, >= 1).
int resolve_workers(const RunConfig& cfg);

} // namespace hamfan
