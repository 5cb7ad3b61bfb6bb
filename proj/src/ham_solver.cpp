#include "ham_solver.hpp"

#include "errors.hpp"

#include <array>

namespace hamfan {

namespace {

// Depth-first search for a spanning path from `start`. In cycle mode the
// last vertex must be adjacent to `start`; in path mode it must be `terminal`.
class SpanningSearch {
public:
    SpanningSearch(const Graph& g, int start, std::optional<int> terminal)
        : g_(g), start_(start), terminal_(terminal)
    {
    }

    std::optional<std::vector<int>> run()
    {
        order_.clear();
        order_.push_back(start_);
        const VertexSet unvisited = g_.vertices() - VertexSet::single(start_);
        if (!extend(start_, unvisited))
            return std::nullopt;
        return order_;
    }

private:
    // The vertex every remaining candidate must be routed through next, -1
    // when free, or -2 when the position is already dead.
    int forced_next(int cur, VertexSet unvisited) const
    {
        VertexSet open = unvisited | VertexSet::single(cur);
        if (!terminal_)
            open.insert(start_);
        int forced = -1;
        for (int w : unvisited) {
            const int avail = (g_.neighbors(w) & open).size();
            const bool is_end = terminal_ && w == *terminal_;
            const int need = is_end ? 1 : 2;
            if (avail < need)
                return -2;
            // In cycle mode the start vertex still owes a closing neighbour,
            // so a tight vertex next to it may come last instead of next.
            const bool ambiguous = !terminal_ && cur == start_;
            if (avail == need && g_.adjacent(w, cur) && !is_end && !ambiguous) {
                if (forced >= 0 && forced != w)
                    return -2;
                forced = w;
            }
        }
        return forced;
    }

    bool extend(int cur, VertexSet unvisited)
    {
        if (unvisited.empty())
            return terminal_ ? cur == *terminal_ : g_.adjacent(cur, start_);
        if (terminal_ && unvisited == VertexSet::single(*terminal_)) {
            if (!g_.adjacent(cur, *terminal_))
                return false;
            order_.push_back(*terminal_);
            return true;
        }
        const int forced = forced_next(cur, unvisited);
        if (forced == -2)
            return false;
        if (!is_connected_within(g_, unvisited | VertexSet::single(cur)))
            return false;

        VertexSet candidates = g_.neighbors(cur) & unvisited;
        if (terminal_)
            candidates.erase(*terminal_);
        if (forced >= 0)
            candidates &= VertexSet::single(forced);
        for (int next : candidates) {
            order_.push_back(next);
            if (extend(next, unvisited - VertexSet::single(next)))
                return true;
            order_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int start_;
    std::optional<int> terminal_;
    std::vector<int> order_;
};

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " outside the graph");
}

} // namespace

std::optional<HamCertificate> hamilton_cycle(const Graph& g)
{
    const int n = g.order();
    if (n < 3 || g.min_degree() < 2 || !is_connected(g))
        return std::nullopt;
    SpanningSearch search(g, 0, std::nullopt);
    if (auto order = search.run())
        return HamCertificate{CertificateKind::cycle, std::move(*order)};
    return std::nullopt;
}

std::optional<HamCertificate> hamilton_path_between(const Graph& g, int x, int y)
{
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y)
        throw Error(Errc::invalid_argument, "Hamilton path endpoints must be distinct");
    if (!is_connected(g))
        return std::nullopt;
    SpanningSearch search(g, x, y);
    if (auto order = search.run())
        return HamCertificate{CertificateKind::path, std::move(*order)};
    return std::nullopt;
}

HamConnectedResult is_hamiltonian_connected(const Graph& g)
{
    HamConnectedResult result;
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto cert = hamilton_path_between(g, x, y);
            if (!cert) {
                result.failing_pair = Edge{x, y};
                return result;
            }
            result.paths.emplace(Edge{x, y}, std::move(*cert));
        }
    result.connected = true;
    return result;
}

// --- longest path -------------------------------------------------------------

namespace {

class LongestPathSearch {
public:
    explicit LongestPathSearch(const Graph& g) : g_(g) {}

    /// Extends `prefix` at its last vertex, keeping the best path found so far.
    void explore(std::vector<int>& prefix, VertexSet unvisited)
    {
        if (static_cast<int>(prefix.size()) > static_cast<int>(best_.size()))
            best_ = prefix;
        if (static_cast<int>(best_.size()) >= ceiling_)
            return;
        const int cur = prefix.back();
        // Upper bound: every vertex still reachable from cur.
        VertexSet reach = VertexSet::single(cur);
        VertexSet frontier = reach;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g_.neighbors(v);
            frontier = (next & unvisited) - reach;
            reach |= frontier;
        }
        if (static_cast<int>(prefix.size()) + reach.size() - 1 <= static_cast<int>(best_.size()))
            return;
        for (int next : g_.neighbors(cur) & unvisited) {
            prefix.push_back(next);
            explore(prefix, unvisited - VertexSet::single(next));
            prefix.pop_back();
            if (static_cast<int>(best_.size()) >= ceiling_)
                return;
        }
    }

    void set_ceiling(int ceiling) { ceiling_ = ceiling; }
    const std::vector<int>& best() const { return best_; }
    void reset_best(std::vector<int> best) { best_ = std::move(best); }

private:
    const Graph& g_;
    std::vector<int> best_;
    int ceiling_ = kMaxVertices + 1;
};

int largest_component(const Graph& g)
{
    VertexSet left = g.vertices();
    int best = 0;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            frontier = g.neighbors_of(frontier) - comp;
            comp |= frontier;
        }
        best = std::max(best, comp.size());
        left -= comp;
    }
    return best;
}

} // namespace

OrientedPath longest_path_from(const Graph& g, const OrientedPath& seed)
{
    if (auto bad = path_defect(g, seed))
        throw PreconditionError("seed path", "seed is not a path: " + *bad);
    const int ceiling = largest_component(g);

    // Seed extensions: tail first, then the other end of the best result.
    LongestPathSearch local(g);
    local.set_ceiling(ceiling);
    std::vector<int> prefix(seed.vertices().begin(), seed.vertices().end());
    local.explore(prefix, g.vertices() - seed.vertex_set());
    std::vector<int> grown(local.best().rbegin(), local.best().rend());
    VertexSet used;
    for (int v : grown)
        used.insert(v);
    local.reset_best({});
    local.explore(grown, g.vertices() - used);
    std::vector<int> from_seed = local.best();
    if (static_cast<int>(from_seed.size()) == ceiling)
        return OrientedPath(from_seed);

    LongestPathSearch global(g);
    global.set_ceiling(ceiling);
    global.reset_best(from_seed);
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> start{v};
        global.explore(start, g.vertices() - VertexSet::single(v));
    }
    return OrientedPath(global.best());
}

} // namespace hamfan
