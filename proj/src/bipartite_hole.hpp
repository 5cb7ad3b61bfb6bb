#pragma once

#include "graph.hpp"

#include <optional>
#include <vector>

namespace hamfan {

/// Disjoint nonempty vertex sets with no edge between them.
struct BipartiteHole {
    VertexSet a;
    VertexSet b;

    bool operator==(const BipartiteHole&) const = default;
};

/// Re-checks a hole against g: disjoint, both sides nonempty and inside
/// V(g), and no crossing edge.
bool is_bipartite_hole(const Graph& g, const BipartiteHole& hole);

struct StSplit {
    int s = 0;
    int t = 0;

    bool operator==(const StSplit&) const = default;
};

struct StCheck {
    bool holds = true;
    std::optional<BipartiteHole> hole; ///< set iff !holds
};

/// Whether every pair of disjoint sets of sizes s and t has a crossing edge.
/// Vacuously true when s + t > n. On failure the returned hole uses the
/// lexicographically first s-set A that has t vertices outside N[A], and the
/// t smallest of those vertices as B.
StCheck st_property_holds(const Graph& g, int s, int t);

struct AlphaTildeResult {
    int value = 0;
    /// Smallest-s split with s + t = value + 1 for which the property holds.
    StSplit witness;
    /// One hole per split (s, t) with s + t = value, s ascending.
    std::vector<BipartiteHole> lower_bound_holes;
};

/// Bipartite independence number with its certificates.
AlphaTildeResult alpha_tilde(const Graph& g);

/// The value and smallest-s witness split, without collecting holes. This is
/// the inner loop of the exhaustive harness.
StSplit alpha_tilde_split(const Graph& g);
inline int alpha_tilde_value(const Graph& g)
{
    const StSplit st = alpha_tilde_split(g);
    return st.s + st.t - 1;
}

/// floor(n/2), certified by checking the (1, floor(n/2)) property. Requires
/// min degree >= n/2 and throws PreconditionError("Dirac premise fails")
/// otherwise.
int alpha_tilde_upper_bound_from_min_degree(const Graph& g);

} // namespace hamfan
