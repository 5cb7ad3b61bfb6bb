#pragma once

#include "vertex_set.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamfan {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Adjacency is one VertexSet per vertex, so neighbourhood unions and
/// intersections are single word operations. The vertex bound is a hard
/// limit of the representation; every constructor rejects larger orders.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::single(v); }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int min_degree() const;

    /// Union of N(v) over v in s, minus s itself.
    VertexSet neighbors_of(VertexSet s) const;

    bool is_complete() const;
    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;

    /// G + uv. Adding an existing edge returns an identical graph.
    Graph with_edge(int u, int v) const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(VertexSet keep) const;

    bool operator==(const Graph& other) const;

private:
    void add_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Named small graphs.
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

Graph complement(const Graph& g);
/// Disjoint union, g's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two parts, g's vertices first.
Graph join(const Graph& g, const Graph& h);

// graph6 and plain edge-list formats.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);
/// Edge list when the first line holds two integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

/// Whether g[within] is connected. The empty set counts as connected.
bool is_connected_within(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// True iff n > k and removing any fewer than k vertices leaves a connected
/// graph. Brute force over all removal sets: C(n, k-1) connectivity tests,
/// fine for k <= 3 at n <= 14 and increasingly expensive beyond.
bool is_k_connected(const Graph& g, int k);

/// Largest k <= cap with is_k_connected(g, k), or 0.
int connectivity_up_to(const Graph& g, int cap);

/// Unordered pairs {x, y}, x < y, that are nonadjacent with a common neighbour.
std::vector<Edge> distance2_nonadjacent_pairs(const Graph& g);

} // namespace hamfan
