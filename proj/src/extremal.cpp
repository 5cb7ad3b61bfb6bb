#include "extremal.hpp"

#include "bipartite_hole.hpp"
#include "conditions.hpp"
#include "errors.hpp"
#include "ham_solver.hpp"

#include <set>

namespace hamfan {

namespace {

constexpr int kMaxVerifyOrder = 14;

int family_order(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::g1:
        return 2 * spec.parameter + 1;
    case Family::g2:
        return 2 * spec.parameter;
    case Family::g3:
        return spec.parameter + 1;
    }
    return 0;
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

FamilyClaim claim(std::string name, const std::string& expected, const std::string& observed)
{
    return FamilyClaim{std::move(name), expected, observed, expected == observed};
}

// Distinct values of max{d(x), d(y)} over nonadjacent distance-2 pairs.
std::set<int> pair_max_degrees(const Graph& g)
{
    std::set<int> out;
    for (const auto& [x, y] : distance2_nonadjacent_pairs(g))
        out.insert(std::max(g.degree(x), g.degree(y)));
    return out;
}

std::string values_text(const std::set<int>& values)
{
    if (values.empty())
        return "no pairs";
    std::string out;
    for (int v : values)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::g1:
        return "g1";
    case Family::g2:
        return "g2";
    case Family::g3:
        return "g3";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    if (name == "g1" || name == "G1")
        return Family::g1;
    if (name == "g2" || name == "G2")
        return Family::g2;
    if (name == "g3" || name == "G3")
        return Family::g3;
    throw Error(Errc::invalid_argument, "unknown family '" + std::string(name) + "' (expected g1, g2 or g3)");
}

Graph build_family(const FamilySpec& spec)
{
    const int p = spec.parameter;
    const int minimum = spec.family == Family::g3 ? 5 : 1;
    if (p < minimum)
        throw Error(Errc::out_of_range, std::string(family_name(spec.family)) + " needs parameter >= "
                                            + std::to_string(minimum));
    if (family_order(spec) > kMaxVertices)
        throw Error(Errc::out_of_range, "family member exceeds the vertex limit");
    switch (spec.family) {
    case Family::g1:
        return join(complete_graph(p), edgeless_graph(p + 1));
    case Family::g2:
        return join(complete_graph(p), edgeless_graph(p));
    case Family::g3:
        return join(disjoint_union(complete_graph(p - 2), complete_graph(1)), complete_graph(2));
    }
    throw Error(Errc::internal, "unhandled family");
}

Edge g3_b_pair(int a)
{
    return {a - 1, a};
}

bool FamilyReport::all_pass() const
{
    for (const auto& c : claims)
        if (!c.pass)
            return false;
    return true;
}

FamilyReport verify_family_claims(const FamilySpec& spec)
{
    const Graph g = build_family(spec);
    if (g.order() > kMaxVerifyOrder)
        throw Error(Errc::too_large, "verification is limited to " + std::to_string(kMaxVerifyOrder) + " vertices");
    const int p = spec.parameter;
    const int alpha = alpha_tilde_value(g);
    const std::set<int> pair_max = pair_max_degrees(g);

    FamilyReport report;
    report.spec = spec;
    report.graph6 = emit_graph6(g);
    report.order = g.order();
    auto& claims = report.claims;

    switch (spec.family) {
    case Family::g1:
        claims.push_back(claim("alpha_tilde", std::to_string(p + 1), std::to_string(alpha)));
        claims.push_back(claim("2-connected", "true", bool_text(is_k_connected(g, 2))));
        claims.push_back(claim("distance-2 pair max degree", std::to_string(alpha - 1), values_text(pair_max)));
        claims.push_back(claim("fan condition at alpha_tilde", "false", bool_text(fan_tilde_condition(g, alpha).holds)));
        claims.push_back(claim("hamiltonian", "false", bool_text(hamilton_cycle(g).has_value())));
        break;
    case Family::g2: {
        if (p >= 3)
            claims.push_back(claim("3-connected", "true", bool_text(is_k_connected(g, 3))));
        claims.push_back(claim("alpha_tilde", std::to_string(p), std::to_string(alpha)));
        claims.push_back(claim("distance-2 pair max degree", std::to_string(alpha), values_text(pair_max)));
        claims.push_back(claim("admissible", "false", bool_text(is_admissible(g, alpha))));
        const HamConnectedResult hc = is_hamiltonian_connected(g);
        claims.push_back(claim("hamiltonian-connected", "false", bool_text(hc.connected)));
        report.failing_pair = hc.failing_pair;
        break;
    }
    case Family::g3: {
        const auto [bx, by] = g3_b_pair(p);
        claims.push_back(claim("alpha_tilde", "2", std::to_string(alpha)));
        claims.push_back(claim("admissible", "true", bool_text(is_admissible(g, alpha))));
        claims.push_back(claim("2-connected", "true", bool_text(is_k_connected(g, 2))));
        claims.push_back(claim("3-connected", "false", bool_text(is_k_connected(g, 3))));
        claims.push_back(claim("Hamilton path between B vertices", "false",
                               bool_text(hamilton_path_between(g, bx, by).has_value())));
        claims.push_back(claim("distance-2 pair max degree", std::to_string(p - 2), values_text(pair_max)));
        break;
    }
    }
    return report;
}

} // namespace hamfan
