#pragma once

#include "graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamfan {

/// A path v_1, ..., v_m with a fixed orientation.
///
/// Positions are 1-based so that rule witnesses read the same as the
/// displayed constructions they implement: position 1 is the first vertex,
/// position m the last. A path may carry one virtual adjacency between
/// positions k and k+1 (an edge of G + e that is missing from G).
class OrientedPath {
public:
    OrientedPath() = default;
    explicit OrientedPath(std::vector<int> verts, std::optional<int> virtual_at = std::nullopt);

    int size() const { return static_cast<int>(verts_.size()); }
    bool empty() const { return verts_.empty(); }
    int at(int position) const { return verts_[position - 1]; }
    int front() const { return verts_.front(); }
    int back() const { return verts_.back(); }
    std::span<const int> vertices() const { return verts_; }
    VertexSet vertex_set() const;

    /// 1-based position of v, or 0 when v is not on the path.
    int position_of(int v) const;
    std::optional<int> successor(int v) const;
    std::optional<int> predecessor(int v) const;

    /// k such that v_k v_{k+1} is the virtual adjacency.
    std::optional<int> virtual_position() const { return virtual_at_; }
    OrientedPath with_virtual_position(std::optional<int> k) const;

    /// Same vertices, opposite orientation; a virtual position k maps to m - k.
    OrientedPath reversed() const;

    bool operator==(const OrientedPath&) const = default;

private:
    std::vector<int> verts_;
    std::optional<int> virtual_at_;
};

/// A cycle c_1, ..., c_m, c_1.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<int> verts) : verts_(std::move(verts)) {}

    int size() const { return static_cast<int>(verts_.size()); }
    int at(int position) const { return verts_[position - 1]; }
    std::span<const int> vertices() const { return verts_; }
    VertexSet vertex_set() const;

    bool operator==(const Cycle&) const = default;

private:
    std::vector<int> verts_;
};

/// Why `p` is not a path of g, or nullopt when it is. The declared virtual
/// adjacency (if any) is exempt from the edge check but must be a non-edge.
std::optional<std::string> path_defect(const Graph& g, const OrientedPath& p);

/// Why `c` is not a cycle of g (needs at least three vertices).
std::optional<std::string> cycle_defect(const Graph& g, const Cycle& c);

enum class CertificateKind { cycle, path };

/// Hamilton cycle or Hamilton path, checkable edge by edge.
struct HamCertificate {
    CertificateKind kind = CertificateKind::cycle;
    std::vector<int> verts;

    bool operator==(const HamCertificate&) const = default;
};

/// Full re-validation: spans V(g), distinct vertices, consecutive adjacency
/// (and wraparound for cycles), and for paths the declared endpoints.
std::optional<std::string> certificate_defect(const Graph& g, const HamCertificate& cert,
                                              std::optional<Edge> endpoints = std::nullopt);

} // namespace hamfan
