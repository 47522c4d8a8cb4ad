#include "tilecount/planar_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "point_index.hpp"
#include "tilecount/error.hpp"

namespace tilecount {

namespace {

constexpr double kMinAngularGap = 1e-9;

}  // namespace

PlanarGraph PlanarGraph::build(const SplitSegmentSet& split, Tolerance tol) {
    VertexClusters clusters = cluster_endpoints(split, tol);

    PlanarGraph g;
    g.vertices_ = std::move(clusters.centroids);
    g.edges_.reserve(split.size());
    for (std::size_t e = 0; e < split.size(); ++e) {
        const std::uint32_t a = clusters.endpoint_cluster[2 * e];
        const std::uint32_t b = clusters.endpoint_cluster[2 * e + 1];
        if (a == b) {
            throw Error(ErrorKind::AmbiguousClustering,
                        "both endpoints of segment " + std::to_string(e) + " fall in vertex " + std::to_string(a));
        }
        g.edges_.push_back({a, b});
    }

    const std::size_t vertex_count = g.vertices_.size();
    const std::size_t half_edges = 2 * g.edges_.size();
    g.offsets_.assign(vertex_count + 1, 0);
    for (HalfEdge h = 0; h < half_edges; ++h) ++g.offsets_[g.origin(h) + 1];
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.rotation_.resize(half_edges);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (HalfEdge h = 0; h < half_edges; ++h) g.rotation_[fill[g.origin(h)]++] = h;

    std::vector<double> angle(half_edges);
    for (HalfEdge h = 0; h < half_edges; ++h) {
        const Point2 from = g.vertices_[g.origin(h)];
        const Point2 to = g.vertices_[g.target(h)];
        angle[h] = std::atan2(to.y - from.y, to.x - from.x);
    }

    g.rotation_slot_.resize(half_edges);
    for (std::uint32_t v = 0; v < vertex_count; ++v) {
        const auto first = g.rotation_.begin() + g.offsets_[v];
        const auto last = g.rotation_.begin() + g.offsets_[v + 1];
        std::sort(first, last, [&](HalfEdge a, HalfEdge b) { return angle[a] < angle[b]; });

        const std::size_t deg = g.degree(v);
        for (std::size_t i = 0; i < deg; ++i) {
            const HalfEdge h = first[static_cast<std::ptrdiff_t>(i)];
            g.rotation_slot_[h] = static_cast<std::uint32_t>(i);
            if (deg < 2) continue;
            const HalfEdge succ = first[static_cast<std::ptrdiff_t>((i + 1) % deg)];
            double gap = angle[succ] - angle[h];
            if (i + 1 == deg) gap += 2.0 * std::numbers::pi;
            if (gap < kMinAngularGap) {
                throw Error(ErrorKind::AmbiguousClustering,
                            "edges " + std::to_string(h >> 1) + " and " + std::to_string(succ >> 1) +
                                " leave vertex " + std::to_string(v) + " in the same direction");
            }
        }
    }
    return g;
}

PlanarGraph::HalfEdge PlanarGraph::next(HalfEdge h) const {
    const HalfEdge back = twin(h);
    const std::uint32_t v = origin(back);
    const std::size_t deg = degree(v);
    const std::size_t slot = rotation_slot_[back];
    return rotation_[offsets_[v] + (slot + deg - 1) % deg];
}

std::vector<FaceRecord> enumerate_faces(const PlanarGraph& g) {
    const std::size_t half_edges = g.half_edge_count();
    std::vector<bool> used(half_edges, false);
    std::vector<FaceRecord> faces;

    for (PlanarGraph::HalfEdge start = 0; start < half_edges; ++start) {
        if (used[start]) continue;
        FaceRecord face;
        double twice_area = 0.0;
        double sx = 0.0;
        double sy = 0.0;
        PlanarGraph::HalfEdge h = start;
        do {
            if (used[h] || face.boundary.size() > half_edges) {
                throw Error(ErrorKind::TraversalIncomplete,
                            "face cycle from half-edge " + std::to_string(start) + " does not close");
            }
            used[h] = true;
            face.boundary.push_back(h);
            const Point2 a = g.vertices()[g.origin(h)];
            const Point2 b = g.vertices()[g.target(h)];
            twice_area += a.x * b.y - b.x * a.y;
            sx += a.x;
            sy += a.y;
            h = g.next(h);
        } while (h != start);

        const auto count = static_cast<double>(face.boundary.size());
        face.centroid = {sx / count, sy / count};
        face.signed_area = 0.5 * twice_area;
        faces.push_back(std::move(face));
    }

    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw Error(ErrorKind::TraversalIncomplete, "some half-edge lies on no face");
    }
    if (faces.empty()) return faces;

    auto outer = std::min_element(faces.begin(), faces.end(),
                                  [](const FaceRecord& a, const FaceRecord& b) { return a.signed_area < b.signed_area; });
    outer->is_outer = true;
    for (const FaceRecord& f : faces) {
        if (!f.is_outer && !(f.signed_area > 0.0)) {
            throw Error(ErrorKind::TraversalIncomplete,
                        "inner face with non-positive area " + std::to_string(f.signed_area) +
                            " (graph is disconnected or inconsistent)");
        }
    }
    return faces;
}

OrbitCensus orbit_census(std::span<const FaceRecord> faces, const PolygonSpec& spec, Tolerance tol) {
    const double match_radius = 10.0 * tol.point_fuzzy;
    const double step = std::numbers::pi / spec.n();

    std::vector<Point2> centroids;
    centroids.reserve(faces.size());
    for (const FaceRecord& f : faces) centroids.push_back(f.centroid);
    const detail::PointIndex index(centroids, match_radius);

    // image[i]: the face that face i lands on after one rotation step.
    std::vector<std::size_t> image(faces.size(), OrbitCensus::npos);
    std::vector<bool> hit(faces.size(), false);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].is_outer) continue;
        const Point2 turned = rotate(faces[i].centroid, step);
        double best = match_radius;
        index.for_each_near(turned, [&](std::uint32_t j) {
            if (faces[j].is_outer) return;
            const double d = distance(turned, faces[j].centroid);
            if (d <= best) {
                best = d;
                image[i] = j;
            }
        });
        if (image[i] == OrbitCensus::npos || hit[image[i]]) {
            throw Error(ErrorKind::OrbitMismatch, "rotated centroid of face " + std::to_string(i) + " matches no unclaimed face");
        }
        hit[image[i]] = true;
    }

    OrbitCensus out;
    out.face_orbit.assign(faces.size(), OrbitCensus::npos);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].is_outer || out.face_orbit[i] != OrbitCensus::npos) continue;
        const std::size_t orbit = out.orbit_sizes.size();
        std::int64_t size = 0;
        for (std::size_t j = i; out.face_orbit[j] == OrbitCensus::npos; j = image[j]) {
            out.face_orbit[j] = orbit;
            ++size;
        }
        if (size != 1 && size != spec.sides()) {
            throw Error(ErrorKind::OrbitMismatch, "orbit of face " + std::to_string(i) + " has size " + std::to_string(size));
        }
        out.orbit_sizes.push_back(size);
        if (size == 1) {
            ++out.central;
        } else {
            ++out.per_ray;
        }
    }
    std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
    return out;
}

}  // namespace tilecount
