#include "path.hpp"

#include "errors.hpp"

#include <algorithm>

namespace hamfan {

OrientedPath::OrientedPath(std::vector<int> verts, std::optional<int> virtual_at)
    : verts_(std::move(verts)), virtual_at_(virtual_at)
{
    if (virtual_at_ && (*virtual_at_ < 1 || *virtual_at_ >= size()))
        throw Error(Errc::out_of_range, "virtual position must lie in 1..m-1");
}

VertexSet OrientedPath::vertex_set() const
{
    VertexSet out;
    for (int v : verts_)
        out.insert(v);
    return out;
}

int OrientedPath::position_of(int v) const
{
    auto it = std::find(verts_.begin(), verts_.end(), v);
    return it == verts_.end() ? 0 : static_cast<int>(it - verts_.begin()) + 1;
}

std::optional<int> OrientedPath::successor(int v) const
{
    const int pos = position_of(v);
    if (pos == 0 || pos == size())
        return std::nullopt;
    return at(pos + 1);
}

std::optional<int> OrientedPath::predecessor(int v) const
{
    const int pos = position_of(v);
    if (pos <= 1)
        return std::nullopt;
    return at(pos - 1);
}

OrientedPath OrientedPath::with_virtual_position(std::optional<int> k) const
{
    return OrientedPath(verts_, k);
}

OrientedPath OrientedPath::reversed() const
{
    std::vector<int> rev(verts_.rbegin(), verts_.rend());
    std::optional<int> k;
    if (virtual_at_)
        k = size() - *virtual_at_;
    return OrientedPath(std::move(rev), k);
}

VertexSet Cycle::vertex_set() const
{
    VertexSet out;
    for (int v : verts_)
        out.insert(v);
    return out;
}

namespace {

std::optional<std::string> sequence_defect(const Graph& g, std::span<const int> verts)
{
    VertexSet seen;
    for (int v : verts) {
        if (v < 0 || v >= g.order())
            return "vertex " + std::to_string(v) + " outside the graph";
        if (seen.contains(v))
            return "vertex " + std::to_string(v) + " repeated";
        seen.insert(v);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> path_defect(const Graph& g, const OrientedPath& p)
{
    if (p.empty())
        return "empty path";
    if (auto bad = sequence_defect(g, p.vertices()))
        return bad;
    for (int i = 1; i < p.size(); ++i) {
        const int u = p.at(i);
        const int v = p.at(i + 1);
        if (p.virtual_position() == i) {
            if (g.adjacent(u, v))
                return "virtual adjacency " + std::to_string(u) + "-" + std::to_string(v) + " is a real edge";
            continue;
        }
        if (!g.adjacent(u, v))
            return "missing edge " + std::to_string(u) + "-" + std::to_string(v);
    }
    return std::nullopt;
}

std::optional<std::string> cycle_defect(const Graph& g, const Cycle& c)
{
    if (c.size() < 3)
        return "cycle needs at least three vertices";
    if (auto bad = sequence_defect(g, c.vertices()))
        return bad;
    for (int i = 1; i <= c.size(); ++i) {
        const int u = c.at(i);
        const int v = c.at(i % c.size() + 1);
        if (!g.adjacent(u, v))
            return "missing edge " + std::to_string(u) + "-" + std::to_string(v);
    }
    return std::nullopt;
}

std::optional<std::string> certificate_defect(const Graph& g, const HamCertificate& cert,
                                              std::optional<Edge> endpoints)
{
    if (static_cast<int>(cert.verts.size()) != g.order())
        return "certificate does not span the graph";
    if (cert.kind == CertificateKind::cycle)
        return cycle_defect(g, Cycle(cert.verts));
    if (auto bad = path_defect(g, OrientedPath(cert.verts)))
        return bad;
    if (endpoints) {
        const auto [x, y] = *endpoints;
        if (cert.verts.front() != x || cert.verts.back() != y)
            return "path endpoints differ from the requested pair";
    }
    return std::nullopt;
}

} // namespace hamfan
