#include "tilecount/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "point_index.hpp"
#include "tilecount/error.hpp"

namespace tilecount {

namespace {

// What happens when an incoming base segment meets one working fragment.
struct Contact {
    std::optional<double> cut_base;
    std::optional<double> cut_working;
};

Contact classify_contact(const Segment& base, const Segment& working, Tolerance tol) {
    const auto params = intersect(base, working, tol);
    // Parallel: bundle members never overlap, so there is nothing to do.
    if (!params) return {};
    const ParamClass on_base = classify_param(params->t, tol);
    const ParamClass on_working = classify_param(params->u, tol);
    if (on_base == ParamClass::Interior) {
        if (on_working == ParamClass::Interior) return {params->t, params->u};
        if (on_working == ParamClass::End) return {params->t, std::nullopt};
    } else if (on_base == ParamClass::End && on_working == ParamClass::Interior) {
        return {std::nullopt, params->u};
    }
    return {};
}

// Uniform grid over the working set. A fragment is registered in every
// cell its (margin-widened) path crosses, so a query along a segment sees
// every fragment that could touch it.
class FragmentGrid {
public:
    FragmentGrid(double xmin, double ymin, double xmax, double ymax, int resolution, double margin)
        : xmin_(xmin - margin),
          ymin_(ymin - margin),
          resolution_(resolution),
          margin_(margin),
          cell_w_((xmax - xmin + 2 * margin) / resolution),
          cell_h_((ymax - ymin + 2 * margin) / resolution),
          cells_(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution)) {}

    std::uint32_t insert(const Segment& s) {
        const auto slot = static_cast<std::uint32_t>(slots_.size());
        slots_.push_back(s);
        alive_.push_back(true);
        stamp_.push_back(0);
        for_each_cell(s, [&](std::size_t cell) { cells_[cell].push_back(slot); });
        return slot;
    }

    void erase(std::uint32_t slot) {
        alive_[slot] = false;
        for_each_cell(slots_[slot], [&](std::size_t cell) {
            auto& list = cells_[cell];
            auto it = std::find(list.begin(), list.end(), slot);
            *it = list.back();
            list.pop_back();
        });
    }

    const Segment& at(std::uint32_t slot) const { return slots_[slot]; }

    /// Distinct live slots registered along `s`, ascending.
    void candidates(const Segment& s, std::vector<std::uint32_t>& out) {
        out.clear();
        ++query_;
        for_each_cell(s, [&](std::size_t cell) {
            for (std::uint32_t slot : cells_[cell]) {
                if (stamp_[slot] != query_) {
                    stamp_[slot] = query_;
                    out.push_back(slot);
                }
            }
        });
        std::sort(out.begin(), out.end());
    }

    std::vector<Segment> live() const {
        std::vector<Segment> out;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (alive_[i]) out.push_back(slots_[i]);
        }
        return out;
    }

private:
    int clamp_index(double v) const {
        return std::clamp(static_cast<int>(std::floor(v)), 0, resolution_ - 1);
    }

    template <class F>
    void for_each_cell(const Segment& s, F&& f) const {
        const Point2 a = s.p0();
        const Point2 b = s.p1();
        const double lo_x = std::min(a.x, b.x);
        const double hi_x = std::max(a.x, b.x);
        const double dx = b.x - a.x;
        const bool steep = std::fabs(dx) <= 1e-12 * s.length();

        const int c0 = clamp_index((lo_x - margin_ - xmin_) / cell_w_);
        const int c1 = clamp_index((hi_x + margin_ - xmin_) / cell_w_);
        for (int c = c0; c <= c1; ++c) {
            double y_lo;
            double y_hi;
            if (steep) {
                y_lo = std::min(a.y, b.y);
                y_hi = std::max(a.y, b.y);
            } else {
                const double xa = std::max(xmin_ + c * cell_w_ - margin_, lo_x);
                const double xb = std::min(xmin_ + (c + 1) * cell_w_ + margin_, hi_x);
                const double ta = std::clamp((xa - a.x) / dx, 0.0, 1.0);
                const double tb = std::clamp((xb - a.x) / dx, 0.0, 1.0);
                const double ya = a.y + ta * (b.y - a.y);
                const double yb = a.y + tb * (b.y - a.y);
                y_lo = std::min(ya, yb);
                y_hi = std::max(ya, yb);
            }
            const int r0 = clamp_index((y_lo - margin_ - ymin_) / cell_h_);
            const int r1 = clamp_index((y_hi + margin_ - ymin_) / cell_h_);
            for (int r = r0; r <= r1; ++r) {
                f(static_cast<std::size_t>(c) * static_cast<std::size_t>(resolution_) + static_cast<std::size_t>(r));
            }
        }
    }

    double xmin_;
    double ymin_;
    int resolution_;
    double margin_;
    double cell_w_;
    double cell_h_;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::vector<Segment> slots_;
    std::vector<bool> alive_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t query_ = 0;
};

}  // namespace

SplitSegmentSet split_all(std::span<const Segment> base, Tolerance tol) {
    std::vector<Segment> working;
    std::vector<double> cuts;
    std::vector<std::size_t> replaced;
    std::vector<Segment> chaff;

    for (const Segment& incoming : base) {
        cuts.clear();
        replaced.clear();
        chaff.clear();
        for (std::size_t i = 0; i < working.size(); ++i) {
            const Contact contact = classify_contact(incoming, working[i], tol);
            if (contact.cut_base) cuts.push_back(*contact.cut_base);
            if (contact.cut_working) {
                auto parts = split_at_params(working[i], {*contact.cut_working}, tol);
                chaff.insert(chaff.end(), parts.begin(), parts.end());
                replaced.push_back(i);
            }
        }
        // Descending swap-and-pop; the moved tail element is never pending.
        for (auto it = replaced.rbegin(); it != replaced.rend(); ++it) {
            working[*it] = working.back();
            working.pop_back();
        }
        working.insert(working.end(), chaff.begin(), chaff.end());
        auto own = split_at_params(incoming, cuts, tol);
        working.insert(working.end(), own.begin(), own.end());
    }
    return SplitSegmentSet{std::move(working)};
}

SplitSegmentSet split_all_fast(std::span<const Segment> base, Tolerance tol) {
    if (base.empty()) return {};

    double xmin = base.front().p0().x;
    double xmax = xmin;
    double ymin = base.front().p0().y;
    double ymax = ymin;
    for (const Segment& s : base) {
        for (Point2 p : {s.p0(), s.p1()}) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    // The final fragment count grows like |base|^2 / 4; aim for a handful
    // of fragments per cell.
    const int resolution = std::clamp(static_cast<int>(0.25 * static_cast<double>(base.size())), 4, 2048);
    FragmentGrid grid(xmin, ymin, xmax, ymax, resolution, 100.0 * tol.point_fuzzy);

    std::vector<std::uint32_t> near;
    std::vector<double> cuts;
    std::vector<std::uint32_t> replaced;
    std::vector<Segment> chaff;
    for (const Segment& incoming : base) {
        cuts.clear();
        replaced.clear();
        chaff.clear();
        grid.candidates(incoming, near);
        for (std::uint32_t slot : near) {
            const Segment& frag = grid.at(slot);
            const Contact contact = classify_contact(incoming, frag, tol);
            if (contact.cut_base) cuts.push_back(*contact.cut_base);
            if (contact.cut_working) {
                auto parts = split_at_params(frag, {*contact.cut_working}, tol);
                chaff.insert(chaff.end(), parts.begin(), parts.end());
                replaced.push_back(slot);
            }
        }
        for (std::uint32_t slot : replaced) grid.erase(slot);
        for (const Segment& s : chaff) grid.insert(s);
        for (const Segment& s : split_at_params(incoming, cuts, tol)) grid.insert(s);
    }
    return SplitSegmentSet{grid.live()};
}

SplitSegmentSet split(std::span<const Segment> base, Tolerance tol, SplitAlgorithm algorithm) {
    return algorithm == SplitAlgorithm::Reference ? split_all(base, tol) : split_all_fast(base, tol);
}

VertexClusters cluster_endpoints(const SplitSegmentSet& split, Tolerance tol) {
    std::vector<Point2> points;
    points.reserve(2 * split.size());
    for (const Segment& s : split.segments) {
        points.push_back(s.p0());
        points.push_back(s.p1());
    }

    const detail::PointIndex index(points, tol.point_fuzzy);
    detail::DisjointSets sets(points.size());
    index.for_each_close_pair([&](std::uint32_t i, std::uint32_t j) {
        if (distance(points[i], points[j]) <= tol.point_fuzzy) sets.unite(i, j);
    });

    VertexClusters out;
    out.endpoint_cluster.resize(points.size());
    std::vector<std::uint32_t> cluster_of_root(points.size(), UINT32_MAX);
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        const std::uint32_t root = sets.find(i);
        if (cluster_of_root[root] == UINT32_MAX) {
            cluster_of_root[root] = static_cast<std::uint32_t>(out.centroids.size());
            out.centroids.push_back({0.0, 0.0});
            members.push_back(0);
        }
        const std::uint32_t c = cluster_of_root[root];
        out.endpoint_cluster[i] = c;
        out.centroids[c].x += points[i].x;
        out.centroids[c].y += points[i].y;
        ++members[c];
    }
    for (std::size_t c = 0; c < out.centroids.size(); ++c) {
        out.centroids[c].x /= members[c];
        out.centroids[c].y /= members[c];
    }

    const double separation = 3.0 * tol.point_fuzzy;
    const detail::PointIndex centroid_index(out.centroids, separation);
    centroid_index.for_each_close_pair([&](std::uint32_t c, std::uint32_t d) {
        if (distance(out.centroids[c], out.centroids[d]) < separation) {
            throw Error(ErrorKind::AmbiguousClustering,
                        "vertex clusters " + std::to_string(c) + " and " + std::to_string(d) + " lie within " +
                            std::to_string(separation) + " of each other");
        }
    });
    return out;
}

std::int64_t count_vertices(const SplitSegmentSet& split, Tolerance tol) {
    return static_cast<std::int64_t>(cluster_endpoints(split, tol).centroids.size());
}

CountSummary summarize(const PolygonSpec& spec, std::int64_t vertices, std::int64_t edges) {
    CountSummary out;
    out.n = spec.n();
    out.vertices = vertices;
    out.edges = edges;
    out.faces = 1 + edges - vertices;
    out.central = spec.n() % 2 == 0 ? 1 : 0;
    const std::int64_t rotational = out.faces - out.central;
    if (rotational % spec.sides() != 0) {
        throw Error(ErrorKind::SymmetryViolation, "F - central = " + std::to_string(rotational) +
                                                      " is not divisible by N = " + std::to_string(spec.sides()));
    }
    out.per_ray = rotational / spec.sides();
    return out;
}

CountSummary counts(const PolygonSpec& spec, Tolerance tol, SplitAlgorithm algorithm) {
    const auto base = base_segments(spec, tol);
    const auto pieces = split(base, tol, algorithm);
    return summarize(spec, count_vertices(pieces, tol), static_cast<std::int64_t>(pieces.size()));
}

}  // namespace tilecount
