#pragma once

#include "bipartite_hole.hpp"
#include "graph.hpp"
#include "path.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hamfan {

enum class RuleId { rt_a, rt_b, rc_0, rc_1, rc_2, ctl, hp_1, hp_2, hp_3, hp_4, hp_5, hp_6, hp_7, hp_8 };

inline constexpr RuleId kAllRules[] = {
    RuleId::rt_a, RuleId::rt_b, RuleId::rc_0, RuleId::rc_1, RuleId::rc_2,
    RuleId::ctl,  RuleId::hp_1, RuleId::hp_2, RuleId::hp_3, RuleId::hp_4,
    RuleId::hp_5, RuleId::hp_6, RuleId::hp_7, RuleId::hp_8,
};

std::string_view rule_name(RuleId id);
/// Accepts "RT-A", "HP-3", ... Throws Error(invalid_argument) otherwise.
RuleId parse_rule_id(std::string_view name);

bool is_hp_rule(RuleId id);
bool is_rc_rule(RuleId id);
/// Number of witness indices the rule takes.
int rule_arity(RuleId id);

/// A rule together with its witness indices, all 1-based path positions:
///   RT-A  {l}         RT-B  {j, j'}
///   RC-0  {a, b}      RC-1  {j}        RC-2 {j', j''}
///   CTL   {i, w}      (cycle position i, off-cycle vertex w)
///   HP-x  {j, j'}     (virtual position k comes from the path)
struct RewriteRule {
    RuleId id = RuleId::rt_a;
    std::vector<int> witness;

    bool operator==(const RewriteRule&) const = default;
};

using RewriteResult = std::variant<OrientedPath, Cycle>;

/// The first failing precondition check, or nullopt when `rule` applies to p.
std::optional<std::string> rewrite_defect(const Graph& g, const OrientedPath& p, const RewriteRule& rule);
std::optional<std::string> rewrite_defect(const Graph& g, const Cycle& c, const RewriteRule& rule);

/// Applies a path rule. Throws PreconditionError naming the failing check.
RewriteResult apply_rewrite(const Graph& g, const OrientedPath& p, const RewriteRule& rule);
/// Applies CTL to a cycle.
OrientedPath apply_rewrite(const Graph& g, const Cycle& c, const RewriteRule& rule);

/// Every witness for which `id` applies to p, in lexicographic order.
std::vector<RewriteRule> enumerate_witnesses(const Graph& g, const OrientedPath& p, RuleId id);
std::vector<RewriteRule> enumerate_witnesses(const Graph& g, const Cycle& c, RuleId id);

/// First closing witness, trying RC-0, RC-1, RC-2 in that order.
std::optional<RewriteRule> find_closing_rule(const Graph& g, const OrientedPath& p);

// --- neighbour splits ----------------------------------------------------------

enum class SplitMode { sec2, sec3_case1, sec3_case2 };

std::string_view split_mode_name(SplitMode mode);
SplitMode parse_split_mode(std::string_view name);

/// Partition of endpoint (sec2) or virtual-edge-end (sec3) neighbourhoods
/// along a path. Sets hold vertices, not positions.
struct NeighborSplit {
    SplitMode mode = SplitMode::sec2;
    StSplit st;
    int k = 0;
    std::optional<int> r;
    std::optional<int> r1; ///< r'
    std::optional<int> r2; ///< r''
    std::vector<std::pair<std::string, VertexSet>> sets;
    /// sec2 only: N(v_1) = S1 u S2 and N(v_m) = T1 u T2.
    bool endpoints_covered = true;

    VertexSet get(std::string_view name) const;
};

/// Split for the given mode with an explicit (s, t).
///
/// sec2: k is the smallest index in 2..m-1 with |N(v_1) n {v_2..v_k}| = s.
/// sec3: the path must carry a virtual position k; r is the smallest index
/// with |N(v_k) n {v_1..v_r}| = s, and the requested case must match r.
/// Missing thresholds raise Error(threshold_missing).
NeighborSplit compute_neighbor_split(const Graph& g, const OrientedPath& p, SplitMode mode, StSplit st);
/// Same with (s, t) taken from the smallest-s split of alpha~(g).
NeighborSplit compute_neighbor_split(const Graph& g, const OrientedPath& p, SplitMode mode);
/// sec3 with the case picked from r. With `allow_missing_r2`, a case-2 split
/// whose r'' does not exist is returned with r2 unset and R4 empty instead of
/// raising.
NeighborSplit compute_sec3_split(const Graph& g, const OrientedPath& p, StSplit st, bool allow_missing_r2 = false);

/// Recomputes every set from its definition and compares.
bool split_is_consistent(const Graph& g, const OrientedPath& p, const NeighborSplit& split);

/// Candidate witnesses drawn from the split sets whose crossing edge is
/// present, without checking the remaining rule preconditions.
///   sec2:  RC-0 (a in S1, b in T1, v_{a-1} ~ v_{b+1}),
///          RC-1 (j in T2, v_1 ~ v_{j+1}),
///          RC-2 (j' in S2, j'' in T2, v_{j'+1} ~ v_{j''+1})
///   case 1: HP-1 S1xT1, HP-2 S1xR1, HP-3 S2xT2, HP-4 U2xT2
///   case 2: HP-5 U3xT3, HP-6 U3xR3, HP-7 R4xS4, HP-8 R4xU4
/// Ordered by rule then lexicographically by witness.
std::vector<RewriteRule> split_crossings(const Graph& g, const OrientedPath& p, const NeighborSplit& split);

/// The crossings that also pass rewrite_defect.
std::vector<RewriteRule> split_witnesses(const Graph& g, const OrientedPath& p, const NeighborSplit& split);

} // namespace hamfan
