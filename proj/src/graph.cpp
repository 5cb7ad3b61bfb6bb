#include "graph.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hamfan {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::parse: return "parse";
    case Errc::out_of_range: return "out_of_range";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::precondition: return "precondition";
    case Errc::threshold_missing: return "threshold_missing";
    case Errc::too_large: return "too_large";
    case Errc::io: return "io";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

std::string_view parse_errc_name(ParseErrc kind) noexcept
{
    switch (kind) {
    case ParseErrc::empty_input: return "empty input";
    case ParseErrc::bad_header: return "malformed header";
    case ParseErrc::byte_out_of_range: return "byte out of range";
    case ParseErrc::truncated: return "truncated input";
    case ParseErrc::trailing_data: return "trailing data";
    case ParseErrc::too_many_vertices: return "too many vertices";
    case ParseErrc::non_integer: return "non-integer token";
    case ParseErrc::self_loop: return "self-loop";
    case ParseErrc::vertex_out_of_range: return "vertex out of range";
    }
    return "parse error";
}

namespace {

void check_order(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw Error(Errc::too_large,
                    "graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

} // namespace

Graph::Graph(int n) : n_(n)
{
    check_order(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw Error(Errc::out_of_range,
                    "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v)
{
    adj_[u].insert(v);
    adj_[v].insert(u);
}

int Graph::size() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += adj_[v].size();
    return twice / 2;
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

VertexSet Graph::neighbors_of(VertexSet s) const
{
    VertexSet out;
    for (int v : s)
        out |= adj_[v];
    return out - s;
}

bool Graph::is_complete() const
{
    for (int v = 0; v < n_; ++v)
        if (degree(v) != n_ - 1)
            return false;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::induced(VertexSet keep) const
{
    keep &= vertices();
    std::array<int, kMaxVertices> relabel{};
    int next = 0;
    for (int v : keep)
        relabel[v] = next++;
    Graph g(next);
    for (int u : keep)
        for (int v : adj_[u] & keep)
            g.adj_[relabel[u]].insert(relabel[v]);
    return g;
}

bool Graph::operator==(const Graph& other) const
{
    if (n_ != other.n_)
        return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v])
            return false;
    return true;
}

Graph complete_graph(int n)
{
    return complement(Graph(n));
}

Graph edgeless_graph(int n)
{
    return Graph(n);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    if (n < 3)
        return path_graph(n);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    return join(Graph(a), Graph(b));
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int offset = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + offset, v + offset);
    return Graph::from_edges(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h)
{
    const int offset = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + offset, v + offset);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            edges.emplace_back(u, v + offset);
    return Graph::from_edges(g.order() + h.order(), edges);
}

// --- graph6 ---------------------------------------------------------------

namespace {

constexpr int kG6Offset = 63;

std::string_view strip_line(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\n' || text.front() == '\r'))
        text.remove_prefix(1);
    return text;
}

int g6_value(char c, std::size_t at)
{
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw ParseError(ParseErrc::byte_out_of_range,
                         "byte " + std::to_string(v) + " at offset " + std::to_string(at));
    return v - kG6Offset;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    text = strip_line(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError(ParseErrc::empty_input, "no graph6 data");
    if (text.front() == ':' || text.front() == '&' || text.front() == ';')
        throw ParseError(ParseErrc::bad_header, "sparse6/digraph6 lines are not graph6");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = g6_value(text[0], 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError(ParseErrc::too_many_vertices, "8-byte size form exceeds the vertex bound");
        if (text.size() < 4)
            throw ParseError(ParseErrc::bad_header, "short size field after '~'");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | g6_value(text[i], i);
        if (n < 63)
            throw ParseError(ParseErrc::bad_header, "long size form used for n < 63");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw ParseError(ParseErrc::too_many_vertices,
                         std::to_string(n) + " vertices exceeds " + std::to_string(kMaxVertices));

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes)
        throw ParseError(ParseErrc::truncated, "expected " + std::to_string(bytes) + " data bytes, got "
                                                   + std::to_string(text.size() - pos));
    if (text.size() - pos > bytes)
        throw ParseError(ParseErrc::trailing_data, "extra bytes after the adjacency data");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = g6_value(text[pos + bit / 6], pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    // Validate every data byte, including the padded tail.
    for (std::size_t i = pos; i < text.size(); ++i)
        g6_value(text[i], i);
    return Graph::from_edges(order, edges);
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
    return out;
}

// --- edge list ------------------------------------------------------------

namespace {

class TokenReader {
public:
    explicit TokenReader(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == text_.size())
            return std::nullopt;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long next_int(const char* what)
    {
        auto token = next();
        if (!token)
            throw ParseError(ParseErrc::truncated, std::string("missing ") + what);
        long value = 0;
        auto [end, ec] = std::from_chars(token->data(), token->data() + token->size(), value);
        if (ec != std::errc() || end != token->data() + token->size())
            throw ParseError(ParseErrc::non_integer, "'" + std::string(*token) + "' for " + what);
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Graph parse_edge_list(std::string_view text)
{
    if (strip_line(text).empty())
        throw ParseError(ParseErrc::empty_input, "no edge-list data");
    TokenReader in(text);
    const long n = in.next_int("vertex count");
    const long m = in.next_int("edge count");
    if (n < 1 || n > kMaxVertices)
        throw ParseError(ParseErrc::too_many_vertices,
                         "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    if (m < 0)
        throw ParseError(ParseErrc::bad_header, "negative edge count");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        const long u = in.next_int("edge endpoint");
        const long v = in.next_int("edge endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseErrc::vertex_out_of_range,
                             "edge " + std::to_string(u) + " " + std::to_string(v) + " with n = "
                                 + std::to_string(n));
        if (u == v)
            throw ParseError(ParseErrc::self_loop, "edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (in.next())
        throw ParseError(ParseErrc::trailing_data, "more than " + std::to_string(m) + " edges");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_auto(std::string_view text)
{
    std::string_view first = strip_line(text);
    if (first.empty())
        throw ParseError(ParseErrc::empty_input, "no graph data");
    first = first.substr(0, first.find('\n'));
    if (first.find(' ') != std::string_view::npos || first.find('\t') != std::string_view::npos)
        return parse_edge_list(text);
    // graph6 lines never contain whitespace.
    return parse_graph6(text);
}

// --- distances and connectivity --------------------------------------------

std::optional<int> distance(const Graph& g, int u, int v)
{
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(Errc::out_of_range, "distance query outside the vertex range");
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.contains(v))
            return d;
        frontier = g.neighbors_of(frontier) - seen;
        seen |= frontier;
    }
    return std::nullopt;
}

bool is_connected_within(const Graph& g, VertexSet within)
{
    if (within.empty())
        return true;
    VertexSet seen = VertexSet::single(within.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbors(v);
        frontier = (next & within) - seen;
        seen |= frontier;
    }
    return seen == within;
}

bool is_connected(const Graph& g)
{
    return is_connected_within(g, g.vertices());
}

namespace {

// Tries every removal set of exactly `remaining` more vertices drawn from
// candidates >= `from`.
bool survives_removals(const Graph& g, VertexSet kept, int from, int remaining)
{
    if (remaining == 0)
        return is_connected_within(g, kept);
    for (int v = from; v < g.order(); ++v)
        if (!survives_removals(g, kept - VertexSet::single(v), v + 1, remaining - 1))
            return false;
    return true;
}

} // namespace

bool is_k_connected(const Graph& g, int k)
{
    if (k < 1)
        throw Error(Errc::invalid_argument, "connectivity level must be positive");
    if (g.order() <= k)
        return false;
    for (int removed = 0; removed < k; ++removed)
        if (!survives_removals(g, g.vertices(), 0, removed))
            return false;
    return true;
}

int connectivity_up_to(const Graph& g, int cap)
{
    int k = 0;
    while (k < cap && is_k_connected(g, k + 1))
        ++k;
    return k;
}

std::vector<Edge> distance2_nonadjacent_pairs(const Graph& g)
{
    std::vector<Edge> out;
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!g.adjacent(x, y) && g.neighbors(x).intersects(g.neighbors(y)))
                out.emplace_back(x, y);
    return out;
}

} // namespace hamfan
