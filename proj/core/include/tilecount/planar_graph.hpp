#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tilecount/arrangement.hpp"
#include "tilecount/geom.hpp"
#include "tilecount/polygon.hpp"

namespace tilecount {

/// Vertex / half-edge incidence structure of a split segment set.
///
/// Edge `e` owns half-edges `2e` (edges[e][0] -> edges[e][1]) and `2e+1`
/// (the reverse). Each vertex lists its outgoing half-edges in increasing
/// angle (counter-clockwise), which is all the face traversal needs.
class PlanarGraph {
public:
    using HalfEdge = std::uint32_t;

    /// Vertices are the endpoint clusters of cluster_endpoints(); each split
    /// segment becomes one edge. Throws Error(AmbiguousClustering) when an
    /// edge collapses onto one vertex or two edges leave a vertex within
    /// 1e-9 rad of each other.
    static PlanarGraph build(const SplitSegmentSet& split, Tolerance tol = {});

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t half_edge_count() const { return 2 * edges_.size(); }

    std::span<const Point2> vertices() const { return vertices_; }
    std::span<const std::array<std::uint32_t, 2>> edges() const { return edges_; }

    static HalfEdge twin(HalfEdge h) { return h ^ 1u; }
    std::uint32_t origin(HalfEdge h) const { return edges_[h >> 1][h & 1u]; }
    std::uint32_t target(HalfEdge h) const { return origin(twin(h)); }

    /// Outgoing half-edges of `v`, counter-clockwise.
    std::span<const HalfEdge> outgoing(std::uint32_t v) const {
        return std::span<const HalfEdge>(rotation_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
    }
    std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Successor of `h` along the face on its left: at the head of `h`, the
    /// first outgoing half-edge clockwise from the way back.
    HalfEdge next(HalfEdge h) const;

private:
    std::vector<Point2> vertices_;
    std::vector<std::array<std::uint32_t, 2>> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<HalfEdge> rotation_;
    std::vector<std::uint32_t> rotation_slot_;
};

inline PlanarGraph build_graph(const SplitSegmentSet& split, Tolerance tol = {}) {
    return PlanarGraph::build(split, tol);
}

struct FaceRecord {
    std::vector<PlanarGraph::HalfEdge> boundary;
    /// Mean of the boundary vertices.
    Point2 centroid;
    /// Shoelace area; positive for inner faces (counter-clockwise boundary).
    double signed_area = 0.0;
    bool is_outer = false;

    std::size_t edge_count() const { return boundary.size(); }
};

/// Traces every face cycle of `g`. The outer face is the one with the most
/// negative area; every other face must have positive area. Throws
/// Error(TraversalIncomplete) if a cycle does not close or the orientation
/// check fails.
std::vector<FaceRecord> enumerate_faces(const PlanarGraph& g);

struct OrbitCensus {
    std::int64_t per_ray = 0;
    int central = 0;
    /// Sorted ascending.
    std::vector<std::int64_t> orbit_sizes;
    /// Orbit index for each input face; npos for the outer face.
    std::vector<std::size_t> face_orbit;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Groups inner faces into orbits of the rotation by 2*pi/N, matching a
/// face to the one whose centroid lies within 10 * point_fuzzy of its
/// rotated centroid. Throws Error(OrbitMismatch) if a rotated centroid has
/// no partner or an orbit size is neither 1 nor N.
OrbitCensus orbit_census(std::span<const FaceRecord> faces, const PolygonSpec& spec, Tolerance tol = {});

}  // namespace tilecount
