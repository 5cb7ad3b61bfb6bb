#pragma once

#include "graph.hpp"
#include "path.hpp"
#include "rewrite.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamfan {

/// One driver move. `action` is EXTEND, REVERSE, CLOSE, KEEP, DIRECT, SEED,
/// FALLBACK, or a rule name such as "RT-B" or "HP-5".
struct TraceStep {
    std::string action;
    std::vector<int> witness;
    std::vector<int> result;
    CertificateKind shape = CertificateKind::path;
    /// Path driver: number of chain edges present in the graph the result
    /// lives in. Always 0 for the cycle driver.
    int level = 0;
    /// HP steps: position of the virtual adjacency in the input path.
    std::optional<int> virtual_k;
};

struct ConstructionTrace {
    CertificateKind kind = CertificateKind::cycle;
    std::vector<int> initial;
    /// Path driver: edges added on top of g, in order.
    std::vector<Edge> virtual_edges;
    std::vector<TraceStep> steps;
    bool fallback = false;

    std::map<std::string, int> rule_counts() const;
};

struct Construction {
    HamCertificate certificate;
    ConstructionTrace trace;
};

/// Cycle driver without the hypothesis check: longest path from vertex 0,
/// then extension, rotation (RT-A/RT-B, breadth-first over endpoint pairs
/// with n^2 applications per search), closure (direct or RC-0/1/2) and CTL
/// absorption, falling back to the exact solver on a stall. Returns nullopt
/// iff g has no Hamilton cycle.
std::optional<Construction> drive_hamilton_cycle(const Graph& g);

/// Graphs G_0 = g, G_1, ..., G_L, each adding the non-edge between V*
/// vertices (w.r.t. the current graph) that maximises the smaller degree,
/// lexicographically first on ties. Stops at a complete graph or when V*
/// spans a clique. Independent of the endpoint pair, so the harness builds
/// it once per graph.
struct VirtualChain {
    std::vector<Edge> edges;
    std::vector<Graph> graphs; ///< graphs[i] = g plus the first i edges
};

VirtualChain build_virtual_chain(const Graph& g);

/// Path driver without the hypothesis check: a Hamilton (x, y)-path in the
/// top of the chain (DIRECT when complete, otherwise a SEED from the exact
/// solver), pulled back one level at a time with HP-1..HP-8, exact solver on
/// a stall. A trace is marked fallback on a stall, or when the chain is empty
/// and g itself had to be solved.
/// Returns nullopt iff g has no Hamilton (x, y)-path.
std::optional<Construction> drive_hamilton_path(const Graph& g, const VirtualChain& chain, int x, int y);
std::optional<Construction> drive_hamilton_path(const Graph& g, int x, int y);

/// Hypothesis-checked entry points. Throw PreconditionError when the
/// theorem's hypothesis fails, Error(invalid_argument) on x == y.
Construction construct_hamilton_cycle(const Graph& g);
Construction construct_hamilton_path(const Graph& g, int x, int y);

/// Re-executes every step from trace.initial, checking each recorded result,
/// and returns the final certificate. Throws Error(internal) on any mismatch
/// or invalid step.
HamCertificate replay_trace(const Graph& g, const ConstructionTrace& trace,
                            std::optional<Edge> endpoints = std::nullopt);

} // namespace hamfan
