#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tilecount/geom.hpp"
#include "tilecount/polygon.hpp"

namespace tilecount {

using SegmentSet = std::vector<Segment>;

/// Output of the splitting loop. No two members cross: every pair is
/// parallel or meets with at least one parameter outside the open interior.
struct SplitSegmentSet {
    std::vector<Segment> segments;

    std::size_t size() const { return segments.size(); }
};

/// Reference splitting loop. Each base segment is intersected against the
/// working set built so far:
///   interior x interior  -> both are cut,
///   interior x end       -> only the touched (interior) side is cut,
/// and the base segment joins the working set as its fragments.
/// Requires that no two base segments overlap collinearly.
/// Throws Error(NumericalDegeneracy) if a fragment collapses below the fuzz.
SplitSegmentSet split_all(std::span<const Segment> base, Tolerance tol = {});

/// Same result multiset as split_all, with the working set held in a
/// uniform grid so each base segment only meets the fragments near it.
SplitSegmentSet split_all_fast(std::span<const Segment> base, Tolerance tol = {});

/// Endpoint clustering shared by vertex counting and graph construction.
struct VertexClusters {
    /// Mean position of each cluster.
    std::vector<Point2> centroids;
    /// Cluster of endpoint `2*i` (p0 of segment i) and `2*i+1` (p1).
    std::vector<std::uint32_t> endpoint_cluster;
};

/// Groups the 2E endpoints into connected components of the relation
/// "distance <= point_fuzzy" using a hash grid of pitch point_fuzzy and
/// union-find over 3x3 cell neighbourhoods. The partition does not depend on
/// segment order. Throws Error(AmbiguousClustering) if two cluster centroids
/// lie closer than 3 * point_fuzzy.
VertexClusters cluster_endpoints(const SplitSegmentSet& split, Tolerance tol = {});

std::int64_t count_vertices(const SplitSegmentSet& split, Tolerance tol = {});

struct CountSummary {
    int n = 0;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t faces = 0;
    std::int64_t per_ray = 0;
    int central = 0;

    friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

/// F = 1 + E - V and the rotational decomposition F = N * per_ray + central,
/// central = 1 iff n is even. Throws Error(SymmetryViolation) if N does not
/// divide F - central.
CountSummary summarize(const PolygonSpec& spec, std::int64_t vertices, std::int64_t edges);

enum class SplitAlgorithm { Reference, Fast };

SplitSegmentSet split(std::span<const Segment> base, Tolerance tol, SplitAlgorithm algorithm);

/// base_segments -> split -> count_vertices -> summarize.
CountSummary counts(const PolygonSpec& spec, Tolerance tol = {}, SplitAlgorithm algorithm = SplitAlgorithm::Fast);

}  // namespace tilecount
