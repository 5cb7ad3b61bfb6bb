#pragma once

#include "graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamfan {

enum class Family { g1, g2, g3 };

std::string_view family_name(Family f);
/// "g1" / "G1" etc. Throws Error(invalid_argument).
Family parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::g1;
    int parameter = 1;
};

/// Vertex labels: clique part first, then the independent part. For g3 the
/// K_{a-2} vertices come first, then the K_1 vertex, then the two vertices
/// of the K_2 that is joined to everything.
///   g1(n) = K_n v complement(K_{n+1}),  n >= 1
///   g2(n) = K_n v complement(K_n),      n >= 1
///   g3(a) = (K_{a-2} u K_1) v K_2,      a >= 5
/// Throws Error(out_of_range) for parameters outside these bounds or past
/// the vertex limit.
Graph build_family(const FamilySpec& spec);

/// The two vertices of the K_2 part of g3(a).
Edge g3_b_pair(int a);

struct FamilyClaim {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct FamilyReport {
    FamilySpec spec;
    std::string graph6;
    int order = 0;
    std::vector<FamilyClaim> claims;
    /// g2: first endpoint pair without a Hamilton path, if any.
    std::optional<Edge> failing_pair;

    bool all_pass() const;
};

/// Evaluates every published property of the family member with the exact
/// routines. Orders above 14 raise Error(too_large).
FamilyReport verify_family_claims(const FamilySpec& spec);

} // namespace hamfan
