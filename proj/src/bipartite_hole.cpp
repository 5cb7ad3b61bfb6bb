#include "bipartite_hole.hpp"

#include "errors.hpp"

#include <algorithm>
#include <array>

namespace hamfan {

namespace {

// Visits the s-subsets of 0..n-1 in lexicographic order together with their
// closed neighbourhood N[A]. `visit` returns false to stop early.
template <typename Visit>
void for_each_subset_lex(const Graph& g, int s, Visit&& visit)
{
    const int n = g.order();
    if (s < 1 || s > n)
        return;
    std::array<int, kMaxVertices> idx{};
    std::array<VertexSet, kMaxVertices + 1> prefix{}; // prefix[i] = N[idx[0..i-1]]
    for (int i = 0; i < s; ++i) {
        idx[i] = i;
        prefix[i + 1] = prefix[i] | g.closed_neighbors(i);
    }
    while (true) {
        VertexSet members;
        for (int i = 0; i < s; ++i)
            members.insert(idx[i]);
        if (!visit(members, prefix[s]))
            return;
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        prefix[i + 1] = prefix[i] | g.closed_neighbors(idx[i]);
        for (int j = i + 1; j < s; ++j) {
            idx[j] = idx[j - 1] + 1;
            prefix[j + 1] = prefix[j] | g.closed_neighbors(idx[j]);
        }
    }
}

VertexSet smallest_members(VertexSet from, int count)
{
    VertexSet out;
    for (int v : from) {
        if (count-- == 0)
            break;
        out.insert(v);
    }
    return out;
}

// Largest |V \ N[A]| over all s-subsets A.
int max_outside(const Graph& g, int s)
{
    const VertexSet all = g.vertices();
    const int ceiling = g.order() - s;
    int best = 0;
    for_each_subset_lex(g, s, [&](VertexSet, VertexSet closed) {
        best = std::max(best, (all - closed).size());
        return best < ceiling;
    });
    return best;
}

} // namespace

bool is_bipartite_hole(const Graph& g, const BipartiteHole& hole)
{
    const VertexSet all = g.vertices();
    if (hole.a.empty() || hole.b.empty() || hole.a.intersects(hole.b))
        return false;
    if (!hole.a.is_subset_of(all) || !hole.b.is_subset_of(all))
        return false;
    for (int v : hole.a)
        if (g.neighbors(v).intersects(hole.b))
            return false;
    return true;
}

StCheck st_property_holds(const Graph& g, int s, int t)
{
    if (s < 1 || t < 1)
        throw Error(Errc::invalid_argument, "split sizes must be positive");
    if (s + t > g.order())
        return {};
    const VertexSet all = g.vertices();
    StCheck result;
    for_each_subset_lex(g, s, [&](VertexSet members, VertexSet closed) {
        const VertexSet outside = all - closed;
        if (outside.size() < t)
            return true;
        result.holds = false;
        result.hole = BipartiteHole{members, smallest_members(outside, t)};
        return false;
    });
    return result;
}

StSplit alpha_tilde_split(const Graph& g)
{
    const int n = g.order();
    if (n < 1)
        throw Error(Errc::invalid_argument, "bipartite independence number needs n >= 1");
    StSplit best{1, std::max(1, max_outside(g, 1) + 1)};
    int best_q = best.s + best.t - 1;
    // A split with s <= t reaches every value, so s only needs to run while
    // 2s <= q + 1 for the current best q.
    for (int s = 2; s <= n && 2 * s <= best_q + 1; ++s) {
        const int t = std::max(1, max_outside(g, s) + 1);
        if (s + t - 1 < best_q) {
            best = {s, t};
            best_q = s + t - 1;
        }
    }
    return best;
}

AlphaTildeResult alpha_tilde(const Graph& g)
{
    AlphaTildeResult result;
    result.witness = alpha_tilde_split(g);
    result.value = result.witness.s + result.witness.t - 1;
    for (int s = 1; s < result.value; ++s) {
        const StCheck check = st_property_holds(g, s, result.value - s);
        if (check.holds)
            throw Error(Errc::internal, "split below the minimum unexpectedly has no hole");
        result.lower_bound_holes.push_back(*check.hole);
    }
    return result;
}

int alpha_tilde_upper_bound_from_min_degree(const Graph& g)
{
    const int n = g.order();
    if (n < 1 || 2 * g.min_degree() < n)
        throw PreconditionError("Dirac premise fails",
                                "Dirac premise fails: minimum degree is below n/2");
    const int bound = n / 2;
    if (!st_property_holds(g, 1, bound).holds)
        throw Error(Errc::internal, "(1, floor(n/2)) property failed under the Dirac premise");
    return bound;
}

} // namespace hamfan
