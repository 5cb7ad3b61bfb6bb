// Slow reference implementations used as test oracles. They share nothing
// with the library beyond Graph adjacency queries.
#pragma once

#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using hamfan::Graph;

// Every subset of {0..n-1} as a sorted vector, by bitmask.
inline std::vector<std::vector<int>> subsets_of_size(int n, int size)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != size)
            continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

// Double enumeration over (A, B): true iff every disjoint pair of sizes s, t
// has an edge between them.
inline bool st_property(const Graph& g, int s, int t)
{
    const int n = g.order();
    if (s + t > n)
        return true;
    for (const auto& a : subsets_of_size(n, s)) {
        std::uint32_t amask = 0;
        for (int v : a)
            amask |= 1u << v;
        for (const auto& b : subsets_of_size(n, t)) {
            bool disjoint = true, edge = false;
            for (int v : b)
                disjoint = disjoint && !(amask >> v & 1);
            if (!disjoint)
                continue;
            for (int u : a)
                for (int v : b)
                    edge = edge || g.adjacent(u, v);
            if (!edge)
                return false;
        }
    }
    return true;
}

inline int alpha_tilde(const Graph& g)
{
    for (int q = 1;; ++q)
        for (int s = 1; s <= q; ++s)
            if (st_property(g, s, q + 1 - s))
                return q;
}

// All permutations; records whether some ordering closes into a cycle and
// which endpoint pairs some ordering connects.
struct HamFacts {
    bool cycle = false;
    std::set<std::pair<int, int>> path_pairs;
};

inline HamFacts hamilton_by_permutation(const Graph& g)
{
    HamFacts f;
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (n == 0)
        return f;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = g.adjacent(perm[i], perm[i + 1]);
        if (!ok)
            continue;
        if (n >= 2)
            f.path_pairs.insert(std::minmax(perm.front(), perm.back()));
        if (n >= 3 && g.adjacent(perm.front(), perm.back()))
            f.cycle = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

// Menger: vertex connectivity as the minimum, over nonadjacent pairs, of the
// number of internally disjoint paths (unit-capacity max flow on the split
// graph); n - 1 for complete graphs.
inline int max_disjoint_paths(const Graph& g, int s, int t)
{
    const int n = g.order();
    const int nodes = 2 * n; // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int v = 0; v < n; ++v)
        cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v))
                cap[2 * u + 1][2 * v] = n;
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(nodes, -1);
        prev[src] = src;
        std::vector<int> queue{src};
        for (std::size_t i = 0; i < queue.size() && prev[dst] < 0; ++i)
            for (int w = 0; w < nodes; ++w)
                if (prev[w] < 0 && cap[queue[i]][w] > 0) {
                    prev[w] = queue[i];
                    queue.push_back(w);
                }
        if (prev[dst] < 0)
            return flow;
        for (int w = dst; w != src; w = prev[w]) {
            --cap[prev[w]][w];
            ++cap[w][prev[w]];
        }
        ++flow;
    }
}

inline int vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                best = std::min(best, max_disjoint_paths(g, u, v));
    return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<hamfan::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// Every labeled graph on n vertices (independent of the harness enumerator).
inline std::vector<Graph> all_graphs(int n)
{
    std::vector<hamfan::Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<hamfan::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

} // namespace oracle
