#pragma once

#include "graph.hpp"
#include "path.hpp"

#include <map>
#include <optional>

namespace hamfan {

/// Exact Hamilton cycle search. Backtracks from vertex 0 in increasing
/// neighbour order, pruning on unvisited vertices that can no longer get two
/// path neighbours, forced moves, and connectivity of the unvisited part.
/// No graph with fewer than three vertices is hamiltonian.
std::optional<HamCertificate> hamilton_cycle(const Graph& g);

/// Exact Hamilton (x, y)-path search. Throws on x == y.
std::optional<HamCertificate> hamilton_path_between(const Graph& g, int x, int y);

struct HamConnectedResult {
    bool connected = false;
    /// First failing pair in lexicographic order.
    std::optional<Edge> failing_pair;
    /// Certificates for every pair checked before the failure (all pairs when
    /// connected).
    std::map<Edge, HamCertificate> paths;
};

/// Lexicographic fail-fast scan over all pairs. K_1 and K_2 count as
/// hamiltonian-connected.
HamConnectedResult is_hamiltonian_connected(const Graph& g);

/// A longest path of g. Paths extending `seed` are tried first and returned
/// when one of them is globally longest.
OrientedPath longest_path_from(const Graph& g, const OrientedPath& seed);

} // namespace hamfan
