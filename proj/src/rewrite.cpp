#include "rewrite.hpp"

#include "errors.hpp"

#include <array>
#include <utility>

namespace hamfan {

namespace {

struct RuleInfo {
    RuleId id;
    std::string_view name;
    int arity;
};

constexpr RuleInfo kRuleInfo[] = {
    {RuleId::rt_a, "RT-A", 1}, {RuleId::rt_b, "RT-B", 2}, {RuleId::rc_0, "RC-0", 2},
    {RuleId::rc_1, "RC-1", 1}, {RuleId::rc_2, "RC-2", 2}, {RuleId::ctl, "CTL", 2},
    {RuleId::hp_1, "HP-1", 2}, {RuleId::hp_2, "HP-2", 2}, {RuleId::hp_3, "HP-3", 2},
    {RuleId::hp_4, "HP-4", 2}, {RuleId::hp_5, "HP-5", 2}, {RuleId::hp_6, "HP-6", 2},
    {RuleId::hp_7, "HP-7", 2}, {RuleId::hp_8, "HP-8", 2},
};

const RuleInfo& info(RuleId id)
{
    for (const auto& entry : kRuleInfo)
        if (entry.id == id)
            return entry;
    throw Error(Errc::internal, "rule table incomplete");
}

using Segment = std::pair<int, int>;

// Output of a rule as inclusive position ranges, walked in the given
// direction and concatenated.
struct Plan {
    bool cycle = false;
    std::vector<Segment> segments;
};

using PlanOrDefect = std::variant<Plan, std::string>;

class Checker {
public:
    Checker(const Graph& g, const OrientedPath& p, std::string_view rule) : g_(g), p_(p), rule_(rule) {}

    // Range check with a readable name.
    bool range(bool ok, std::string_view what)
    {
        if (!ok && !defect_)
            defect_ = std::string(rule_) + ": requires " + std::string(what);
        return ok;
    }

    bool edge(int i, int j, std::string_view what)
    {
        if (defect_)
            return false;
        if (!g_.adjacent(p_.at(i), p_.at(j))) {
            defect_ = std::string(rule_) + ": " + std::string(what) + " is not an edge";
            return false;
        }
        return true;
    }

    bool failed() const { return defect_.has_value(); }
    std::string defect() const { return *defect_; }

private:
    const Graph& g_;
    const OrientedPath& p_;
    std::string_view rule_;
    std::optional<std::string> defect_;
};

std::string idx(std::string_view base, int i)
{
    return std::string(base) + std::to_string(i);
}

// Preconditions on a path already known to be valid.
PlanOrDefect plan_rule(const Graph& g, const OrientedPath& p, const RewriteRule& rule)
{
    const std::string_view name = rule_name(rule.id);
    if (rule.id == RuleId::ctl)
        return std::string(name) + ": applies to cycles, not paths";
    if (static_cast<int>(rule.witness.size()) != rule_arity(rule.id))
        return std::string(name) + ": expected " + std::to_string(rule_arity(rule.id)) + " witness indices";
    if (is_hp_rule(rule.id) && !p.virtual_position())
        return std::string(name) + ": path has no virtual adjacency";
    if (!is_hp_rule(rule.id) && p.virtual_position())
        return std::string(name) + ": path carries a virtual adjacency";

    const int m = p.size();
    const int w0 = rule.witness[0];
    const int w1 = rule.witness.size() > 1 ? rule.witness[1] : 0;
    Checker c(g, p, name);
    Plan plan;

    switch (rule.id) {
    case RuleId::rt_a: {
        const int l = w0;
        if (c.range(3 <= l && l <= m, "3 <= l <= m") && c.edge(1, l, "v1 v" + std::to_string(l)))
            plan.segments = {{l - 1, 1}, {l, m}};
        break;
    }
    case RuleId::rt_b: {
        const int j = w0, jp = w1;
        if (c.range(2 <= j && j + 2 <= jp && jp <= m, "2 <= j, j + 2 <= j' <= m")
            && c.edge(1, j + 1, idx("v1 v", j + 1)) && c.edge(j, jp, idx("v", j) + idx(" v", jp)))
            plan.segments = {{jp - 1, j + 1}, {1, j}, {jp, m}};
        break;
    }
    case RuleId::rc_0: {
        const int a = w0, b = w1;
        plan.cycle = true;
        if (c.range(2 <= a && a <= b && b <= m - 1, "2 <= a <= b <= m - 1")
            && c.edge(1, a, idx("v1 v", a)) && c.edge(m, b, idx("vm v", b))
            && c.edge(a - 1, b + 1, idx("v", a - 1) + idx(" v", b + 1)))
            plan.segments = {{a, b}, {m, b + 1}, {a - 1, 1}};
        break;
    }
    case RuleId::rc_1: {
        const int j = w0;
        plan.cycle = true;
        if (c.range(m >= 3 && 1 <= j && j <= m - 1, "m >= 3 and 1 <= j <= m - 1")
            && c.edge(j, m, idx("v", j) + " vm") && c.edge(1, j + 1, idx("v1 v", j + 1)))
            plan.segments = {{1, j}, {m, j + 1}};
        break;
    }
    case RuleId::rc_2: {
        const int jp = w0, jpp = w1;
        plan.cycle = true;
        if (c.range(1 <= jpp && jpp < jp && jp <= m - 1, "1 <= j'' < j' <= m - 1")
            && c.edge(1, jp, idx("v1 v", jp)) && c.edge(m, jpp, idx("vm v", jpp))
            && c.edge(jp + 1, jpp + 1, idx("v", jp + 1) + idx(" v", jpp + 1)))
            plan.segments = {{1, jpp}, {m, jp + 1}, {jpp + 1, jp}};
        break;
    }
    default:
        break;
    }
    if (!is_hp_rule(rule.id)) {
        if (c.failed())
            return c.defect();
        return plan;
    }

    const int k = *p.virtual_position();
    const int n = m;
    const int j = w0, jp = w1;
    auto e = [&](int a, int b) { return c.edge(a, b, idx("v", a) + idx(" v", b)); };
    switch (rule.id) {
    case RuleId::hp_1:
        if (c.range(1 <= j && j < jp && jp <= k - 1, "1 <= j < j' <= k - 1") && e(j, k) && e(jp, k + 1)
            && e(j + 1, jp + 1))
            plan.segments = {{1, j}, {k, jp + 1}, {j + 1, jp}, {k + 1, n}};
        break;
    case RuleId::hp_2:
        if (c.range(1 <= j && j <= k - 1 && k + 2 <= jp && jp <= n, "1 <= j <= k - 1, k + 2 <= j' <= n")
            && e(j, k) && e(j + 1, jp - 1) && e(k + 1, jp))
            plan.segments = {{1, j}, {k, j + 1}, {jp - 1, k + 1}, {jp, n}};
        break;
    case RuleId::hp_3:
        if (c.range(2 <= jp && jp < j && j <= k - 1, "2 <= j' < j <= k - 1") && e(jp - 1, j + 1) && e(k, j)
            && e(jp, k + 1))
            plan.segments = {{1, jp - 1}, {j + 1, k}, {j, jp}, {k + 1, n}};
        break;
    case RuleId::hp_4:
        if (c.range(2 <= jp && jp <= k - 1 && k + 2 <= j && j <= n, "2 <= j' <= k - 1, k + 2 <= j <= n")
            && e(jp - 1, j - 1) && e(k + 1, jp) && e(k, j))
            plan.segments = {{1, jp - 1}, {j - 1, k + 1}, {jp, k}, {j, n}};
        break;
    case RuleId::hp_5:
        if (c.range(k + 2 <= jp && jp < j && j <= n - 1, "k + 2 <= j' < j <= n - 1") && e(k, j) && e(jp, k + 1)
            && e(jp - 1, j + 1))
            plan.segments = {{1, k}, {j, jp}, {k + 1, jp - 1}, {j + 1, n}};
        break;
    case RuleId::hp_6:
        if (c.range(1 <= jp && jp <= k - 1 && k + 2 <= j && j <= n - 1, "1 <= j' <= k - 1, k + 2 <= j <= n - 1")
            && e(jp, k + 1) && e(j, k) && e(jp + 1, j + 1))
            plan.segments = {{1, jp}, {k + 1, j}, {k, jp + 1}, {j + 1, n}};
        break;
    case RuleId::hp_7:
        if (c.range(1 <= jp && jp <= k - 1 && k + 2 <= j && j <= n, "1 <= j' <= k - 1, k + 2 <= j <= n")
            && e(jp, k) && e(jp + 1, j - 1) && e(k + 1, j))
            plan.segments = {{1, jp}, {k, jp + 1}, {j - 1, k + 1}, {j, n}};
        break;
    case RuleId::hp_8:
        if (c.range(k + 2 <= jp && jp < j && j <= n, "k + 2 <= j' < j <= n") && e(k, jp) && e(j - 1, jp - 1)
            && e(k + 1, j))
            plan.segments = {{1, k}, {jp, j - 1}, {jp - 1, k + 1}, {j, n}};
        break;
    default:
        break;
    }
    if (c.failed())
        return c.defect();
    return plan;
}

std::vector<int> assemble(const OrientedPath& p, const Plan& plan)
{
    std::vector<int> out;
    out.reserve(p.size());
    for (const auto& [from, to] : plan.segments) {
        const int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            out.push_back(p.at(i));
            if (i == to)
                break;
        }
    }
    if (static_cast<int>(out.size()) != p.size())
        throw Error(Errc::internal, "rewrite segments do not cover the path");
    return out;
}

void require_path(const Graph& g, const OrientedPath& p)
{
    if (auto bad = path_defect(g, p))
        throw PreconditionError("input path", "input is not a path: " + *bad);
}

VertexSet span(const OrientedPath& p, int lo, int hi)
{
    VertexSet out;
    for (int i = std::max(lo, 1); i <= std::min(hi, p.size()); ++i)
        out.insert(p.at(i));
    return out;
}

std::vector<int> positions(const OrientedPath& p, VertexSet s)
{
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (s.contains(p.at(i)))
            out.push_back(i);
    return out;
}

} // namespace

std::string_view rule_name(RuleId id)
{
    return info(id).name;
}

RuleId parse_rule_id(std::string_view name)
{
    for (const auto& entry : kRuleInfo)
        if (entry.name == name)
            return entry.id;
    throw Error(Errc::invalid_argument, "unknown rule '" + std::string(name) + "'");
}

bool is_hp_rule(RuleId id)
{
    return id >= RuleId::hp_1;
}

bool is_rc_rule(RuleId id)
{
    return id == RuleId::rc_0 || id == RuleId::rc_1 || id == RuleId::rc_2;
}

int rule_arity(RuleId id)
{
    return info(id).arity;
}

std::optional<std::string> rewrite_defect(const Graph& g, const OrientedPath& p, const RewriteRule& rule)
{
    if (auto bad = path_defect(g, p))
        return "input is not a path: " + *bad;
    auto plan = plan_rule(g, p, rule);
    if (auto* defect = std::get_if<std::string>(&plan))
        return *defect;
    return std::nullopt;
}

std::optional<std::string> rewrite_defect(const Graph& g, const Cycle& c, const RewriteRule& rule)
{
    if (rule.id != RuleId::ctl)
        return std::string(rule_name(rule.id)) + ": applies to paths, not cycles";
    if (auto bad = cycle_defect(g, c))
        return "input is not a cycle: " + *bad;
    if (rule.witness.size() != 2)
        return std::string("CTL: expected 2 witness indices");
    const int i = rule.witness[0];
    const int w = rule.witness[1];
    if (i < 1 || i > c.size())
        return std::string("CTL: requires 1 <= i <= m");
    if (w < 0 || w >= g.order())
        return std::string("CTL: off-cycle vertex outside the graph");
    if (c.vertex_set().contains(w))
        return std::string("CTL: w lies on the cycle");
    if (!g.adjacent(w, c.at(i)))
        return "CTL: w c" + std::to_string(i) + " is not an edge";
    return std::nullopt;
}

RewriteResult apply_rewrite(const Graph& g, const OrientedPath& p, const RewriteRule& rule)
{
    require_path(g, p);
    auto planned = plan_rule(g, p, rule);
    if (auto* defect = std::get_if<std::string>(&planned))
        throw PreconditionError(std::string(rule_name(rule.id)), *defect);
    const Plan& plan = std::get<Plan>(planned);
    std::vector<int> seq = assemble(p, plan);
    if (plan.cycle) {
        Cycle out(std::move(seq));
        if (auto bad = cycle_defect(g, out))
            throw Error(Errc::internal, std::string(rule_name(rule.id)) + " produced an invalid cycle: " + *bad);
        return out;
    }
    OrientedPath out(std::move(seq));
    if (auto bad = path_defect(g, out))
        throw Error(Errc::internal, std::string(rule_name(rule.id)) + " produced an invalid path: " + *bad);
    return out;
}

OrientedPath apply_rewrite(const Graph& g, const Cycle& c, const RewriteRule& rule)
{
    if (auto bad = rewrite_defect(g, c, rule))
        throw PreconditionError(std::string(rule_name(rule.id)), *bad);
    const int i = rule.witness[0];
    std::vector<int> seq{rule.witness[1]};
    for (int q = i; q <= c.size(); ++q)
        seq.push_back(c.at(q));
    for (int q = 1; q < i; ++q)
        seq.push_back(c.at(q));
    return OrientedPath(std::move(seq));
}

std::vector<RewriteRule> enumerate_witnesses(const Graph& g, const OrientedPath& p, RuleId id)
{
    std::vector<RewriteRule> out;
    if (id == RuleId::ctl || path_defect(g, p))
        return out;
    const int m = p.size();
    if (rule_arity(id) == 1) {
        for (int a = 1; a <= m; ++a) {
            RewriteRule r{id, {a}};
            if (std::holds_alternative<Plan>(plan_rule(g, p, r)))
                out.push_back(std::move(r));
        }
        return out;
    }
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            RewriteRule r{id, {a, b}};
            if (std::holds_alternative<Plan>(plan_rule(g, p, r)))
                out.push_back(std::move(r));
        }
    return out;
}

std::vector<RewriteRule> enumerate_witnesses(const Graph& g, const Cycle& c, RuleId id)
{
    std::vector<RewriteRule> out;
    if (id != RuleId::ctl || cycle_defect(g, c))
        return out;
    const VertexSet on = c.vertex_set();
    for (int i = 1; i <= c.size(); ++i)
        for (int w : g.neighbors(c.at(i)) - on)
            out.push_back(RewriteRule{RuleId::ctl, {i, w}});
    return out;
}

std::optional<RewriteRule> find_closing_rule(const Graph& g, const OrientedPath& p)
{
    if (p.size() < 3 || path_defect(g, p))
        return std::nullopt;
    const int m = p.size();
    const VertexSet n1 = g.neighbors(p.front());
    const VertexSet nm = g.neighbors(p.back());
    auto at = [&](int i) { return p.at(i); };
    for (int a = 2; a <= m - 1; ++a) {
        if (!n1.contains(at(a)))
            continue;
        for (int b = a; b <= m - 1; ++b)
            if (nm.contains(at(b)) && g.adjacent(at(a - 1), at(b + 1)))
                return RewriteRule{RuleId::rc_0, {a, b}};
    }
    for (int j = 1; j <= m - 1; ++j)
        if (nm.contains(at(j)) && n1.contains(at(j + 1)))
            return RewriteRule{RuleId::rc_1, {j}};
    for (int jp = 2; jp <= m - 1; ++jp) {
        if (!n1.contains(at(jp)))
            continue;
        for (int jpp = 1; jpp < jp; ++jpp)
            if (nm.contains(at(jpp)) && g.adjacent(at(jp + 1), at(jpp + 1)))
                return RewriteRule{RuleId::rc_2, {jp, jpp}};
    }
    return std::nullopt;
}

// --- neighbour splits ----------------------------------------------------------

std::string_view split_mode_name(SplitMode mode)
{
    switch (mode) {
    case SplitMode::sec2:
        return "sec2";
    case SplitMode::sec3_case1:
        return "sec3_case1";
    case SplitMode::sec3_case2:
        return "sec3_case2";
    }
    return "unknown";
}

SplitMode parse_split_mode(std::string_view name)
{
    for (SplitMode m : {SplitMode::sec2, SplitMode::sec3_case1, SplitMode::sec3_case2})
        if (split_mode_name(m) == name)
            return m;
    throw Error(Errc::invalid_argument, "unknown split mode '" + std::string(name) + "'");
}

VertexSet NeighborSplit::get(std::string_view name) const
{
    for (const auto& [key, set] : sets)
        if (key == name)
            return set;
    throw Error(Errc::invalid_argument, "split has no set named '" + std::string(name) + "'");
}

namespace {

NeighborSplit sec2_split(const Graph& g, const OrientedPath& p, StSplit st)
{
    const int m = p.size();
    const VertexSet n1 = g.neighbors(p.front());
    const VertexSet nm = g.neighbors(p.back());
    NeighborSplit out;
    out.mode = SplitMode::sec2;
    out.st = st;
    int count = 0;
    for (int k = 2; k <= m - 1; ++k) {
        count += n1.contains(p.at(k));
        if (count == st.s) {
            out.k = k;
            break;
        }
    }
    if (out.k == 0)
        throw Error(Errc::threshold_missing, "no k in 2..m-1 with |N(v1) n {v2..vk}| = s");
    const int k = out.k;
    const VertexSet s1 = n1 & span(p, 2, k);
    const VertexSet s2 = n1 & span(p, k + 1, m - 1);
    const VertexSet t1 = nm & span(p, k, m - 1);
    const VertexSet t2 = nm & span(p, 2, k - 1);
    out.sets = {{"S1", s1}, {"S2", s2}, {"T1", t1}, {"T2", t2}};
    out.endpoints_covered = n1 == (s1 | s2) && nm == (t1 | t2);
    return out;
}

NeighborSplit sec3_split(const Graph& g, const OrientedPath& p, StSplit st, std::optional<SplitMode> want,
                         bool allow_missing_r2)
{
    if (!p.virtual_position())
        throw PreconditionError("virtual position", "path carries no virtual adjacency");
    const int n = p.size();
    const int k = *p.virtual_position();
    const VertexSet nk = g.neighbors(p.at(k));
    const VertexSet nk1 = g.neighbors(p.at(k + 1));
    NeighborSplit out;
    out.st = st;
    out.k = k;

    int count = 0;
    for (int r = 1; r <= n; ++r) {
        count += nk.contains(p.at(r));
        if (count == st.s) {
            out.r = r;
            break;
        }
    }
    if (!out.r)
        throw Error(Errc::threshold_missing, "no r with |N(vk) n {v1..vr}| = s");
    const int r = *out.r;
    out.mode = r <= k - 1 ? SplitMode::sec3_case1 : SplitMode::sec3_case2;
    if (want && *want != out.mode)
        throw PreconditionError("split case", "r = " + std::to_string(r) + " selects "
                                                  + std::string(split_mode_name(out.mode)));

    const VertexSet s1 = nk & span(p, 1, r);
    if (out.mode == SplitMode::sec3_case1) {
        out.sets = {
            {"S1", s1},
            {"T1", nk1 & span(p, r + 1, k - 1)},
            {"R1", nk1 & span(p, k + 2, n)},
            {"S2", nk & span(p, r + 1, k - 1)},
            {"U2", nk & span(p, k + 2, n)},
            {"T2", nk1 & span(p, 2, r)},
        };
        return out;
    }

    for (int r1 = n; r1 >= r; --r1)
        if ((nk & span(p, r1, n)).size() == st.s + 1) {
            out.r1 = r1;
            break;
        }
    if (!out.r1)
        throw Error(Errc::threshold_missing, "no r' with |N(vk) n {vr'..vn}| = s + 1");
    const int r1 = *out.r1;
    for (int r2 = n; r2 >= r1; --r2)
        if ((nk1 & span(p, r2, n)).size() == st.s) {
            out.r2 = r2;
            break;
        }
    if (!out.r2 && !allow_missing_r2)
        throw Error(Errc::threshold_missing, "no r'' with |N(vk+1) n {vr''..vn}| = s");
    const VertexSet r4 = out.r2 ? nk1 & span(p, *out.r2, n) : VertexSet{};
    out.sets = {
        {"S1", s1},
        {"S3", nk & span(p, r, n)},
        {"U3", nk & span(p, r1, n - 1)},
        {"T3", nk1 & span(p, k + 2, r1 - 1)},
        {"R3", nk1 & span(p, 1, k - 1)},
        {"T4", nk1 & span(p, r1, n)},
        {"R4", r4},
        {"S4", nk & span(p, 1, k - 1)},
        {"U4", nk & span(p, k + 2, r1)},
    };
    return out;
}

} // namespace

NeighborSplit compute_neighbor_split(const Graph& g, const OrientedPath& p, SplitMode mode, StSplit st)
{
    if (st.s < 1 || st.t < 1)
        throw Error(Errc::invalid_argument, "s and t must be positive");
    require_path(g, p);
    if (mode == SplitMode::sec2) {
        if (p.virtual_position())
            throw PreconditionError("virtual position", "sec2 split takes a path of G");
        return sec2_split(g, p, st);
    }
    return sec3_split(g, p, st, mode, false);
}

NeighborSplit compute_neighbor_split(const Graph& g, const OrientedPath& p, SplitMode mode)
{
    return compute_neighbor_split(g, p, mode, alpha_tilde_split(g));
}

NeighborSplit compute_sec3_split(const Graph& g, const OrientedPath& p, StSplit st, bool allow_missing_r2)
{
    if (st.s < 1 || st.t < 1)
        throw Error(Errc::invalid_argument, "s and t must be positive");
    require_path(g, p);
    return sec3_split(g, p, st, std::nullopt, allow_missing_r2);
}

bool split_is_consistent(const Graph& g, const OrientedPath& p, const NeighborSplit& split)
{
    // Membership by position, written out independently of the builders.
    auto set_of = [&](int who, int lo, int hi) {
        VertexSet out;
        for (int i = lo; i <= hi; ++i)
            if (i >= 1 && i <= p.size() && g.adjacent(p.at(who), p.at(i)))
                out.insert(p.at(i));
        return out;
    };
    const int m = p.size();
    const int k = split.k;
    std::vector<std::pair<std::string, VertexSet>> expect;
    if (split.mode == SplitMode::sec2) {
        if (set_of(1, 2, k).size() != split.st.s || !g.adjacent(p.at(1), p.at(k)))
            return false;
        expect = {{"S1", set_of(1, 2, k)}, {"S2", set_of(1, k + 1, m - 1)},
                  {"T1", set_of(m, k, m - 1)}, {"T2", set_of(m, 2, k - 1)}};
    } else {
        if (!split.r)
            return false;
        const int r = *split.r;
        if (set_of(k, 1, r).size() != split.st.s || !g.adjacent(p.at(k), p.at(r)))
            return false;
        if (split.mode == SplitMode::sec3_case1) {
            if (r > k - 1)
                return false;
            expect = {{"S1", set_of(k, 1, r)},          {"T1", set_of(k + 1, r + 1, k - 1)},
                      {"R1", set_of(k + 1, k + 2, m)},  {"S2", set_of(k, r + 1, k - 1)},
                      {"U2", set_of(k, k + 2, m)},      {"T2", set_of(k + 1, 2, r)}};
        } else {
            if (r < k + 2 || !split.r1 || !split.r2)
                return false;
            const int r1 = *split.r1;
            const int r2 = *split.r2;
            if (set_of(k, r1, m).size() != split.st.s + 1 || !g.adjacent(p.at(k), p.at(r1)))
                return false;
            if (set_of(k + 1, r2, m).size() != split.st.s || !g.adjacent(p.at(k + 1), p.at(r2)))
                return false;
            expect = {{"S1", set_of(k, 1, r)},          {"S3", set_of(k, r, m)},
                      {"U3", set_of(k, r1, m - 1)},     {"T3", set_of(k + 1, k + 2, r1 - 1)},
                      {"R3", set_of(k + 1, 1, k - 1)},  {"T4", set_of(k + 1, r1, m)},
                      {"R4", set_of(k + 1, r2, m)},     {"S4", set_of(k, 1, k - 1)},
                      {"U4", set_of(k, k + 2, r1)}};
        }
    }
    return expect == split.sets;
}

std::vector<RewriteRule> split_crossings(const Graph& g, const OrientedPath& p, const NeighborSplit& split)
{
    std::vector<RewriteRule> out;
    auto edge = [&](int i, int j) {
        return i >= 1 && j >= 1 && i <= p.size() && j <= p.size() && g.adjacent(p.at(i), p.at(j));
    };
    // For each (j in A, j' in B) with v_{j+da} ~ v_{j'+db}.
    auto cross = [&](RuleId id, std::string_view a, std::string_view b, int da, int db) {
        for (int j : positions(p, split.get(a)))
            for (int jp : positions(p, split.get(b)))
                if (edge(j + da, jp + db))
                    out.push_back(RewriteRule{id, {j, jp}});
    };
    switch (split.mode) {
    case SplitMode::sec2:
        cross(RuleId::rc_0, "S1", "T1", -1, +1);
        for (int j : positions(p, split.get("T2")))
            if (edge(1, j + 1))
                out.push_back(RewriteRule{RuleId::rc_1, {j}});
        cross(RuleId::rc_2, "S2", "T2", +1, +1);
        break;
    case SplitMode::sec3_case1:
        cross(RuleId::hp_1, "S1", "T1", +1, +1);
        cross(RuleId::hp_2, "S1", "R1", +1, -1);
        cross(RuleId::hp_3, "S2", "T2", +1, -1);
        cross(RuleId::hp_4, "U2", "T2", -1, -1);
        break;
    case SplitMode::sec3_case2:
        cross(RuleId::hp_5, "U3", "T3", +1, -1);
        cross(RuleId::hp_6, "U3", "R3", +1, +1);
        cross(RuleId::hp_7, "R4", "S4", -1, +1);
        cross(RuleId::hp_8, "R4", "U4", -1, -1);
        break;
    }
    return out;
}

std::vector<RewriteRule> split_witnesses(const Graph& g, const OrientedPath& p, const NeighborSplit& split)
{
    std::vector<RewriteRule> out;
    for (auto& rule : split_crossings(g, p, split))
        if (std::holds_alternative<Plan>(plan_rule(g, p, rule)))
            out.push_back(std::move(rule));
    return out;
}

} // namespace hamfan
