#include "tilecount/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tilecount/error.hpp"

namespace tilecount {

namespace {

// Fixed six decimals; negative zero printed as zero.
std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s.erase(0, 1);
    return s;
}

std::string hex_color(double hue_deg, double sat, double light) {
    // HSL -> RGB
    const double c = (1.0 - std::fabs(2.0 * light - 1.0)) * sat;
    const double hp = hue_deg / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    const double m = light - c / 2.0;
    auto channel = [&](double v) { return std::clamp(static_cast<int>(std::lround((v + m) * 255.0)), 0, 255); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(r), channel(g), channel(b));
    return buf;
}

std::string orbit_color(std::size_t orbit) {
    // Golden-angle hue steps keep neighbouring orbit indices distinct.
    return hex_color(std::fmod(static_cast<double>(orbit) * 137.50776405003785, 360.0), 0.55, 0.72);
}

bool inside(Window w, Point2 p) { return p.x >= w.x0 && p.x <= w.x1 && p.y >= w.y0 && p.y <= w.y1; }

// Liang-Barsky; nullopt when nothing of the segment is inside.
std::optional<std::pair<Point2, Point2>> clip_segment(Point2 a, Point2 b, Window w) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    double lo = 0.0;
    double hi = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - w.x0, w.x1 - a.x, a.y - w.y0, w.y1 - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return std::nullopt;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            lo = std::max(lo, r);
        } else {
            hi = std::min(hi, r);
        }
    }
    if (!(lo < hi)) return std::nullopt;
    auto at = [&](double t) {
        return Point2{std::clamp(a.x + t * dx, w.x0, w.x1), std::clamp(a.y + t * dy, w.y0, w.y1)};
    };
    return std::pair{at(lo), at(hi)};
}

// Sutherland-Hodgman against the four window edges.
std::vector<Point2> clip_polygon(std::vector<Point2> poly, Window w) {
    auto pass = [&](auto keep, auto cross) {
        std::vector<Point2> out;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point2 cur = poly[i];
            const Point2 prev = poly[(i + poly.size() - 1) % poly.size()];
            const bool in_cur = keep(cur);
            const bool in_prev = keep(prev);
            if (in_cur) {
                if (!in_prev) out.push_back(cross(prev, cur));
                out.push_back(cur);
            } else if (in_prev) {
                out.push_back(cross(prev, cur));
            }
        }
        poly = std::move(out);
    };
    auto at_x = [](double x) {
        return [x](Point2 a, Point2 b) { return Point2{x, a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x)}; };
    };
    auto at_y = [](double y) {
        return [y](Point2 a, Point2 b) { return Point2{a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y), y}; };
    };
    pass([&](Point2 p) { return p.x >= w.x0; }, at_x(w.x0));
    if (!poly.empty()) pass([&](Point2 p) { return p.x <= w.x1; }, at_x(w.x1));
    if (!poly.empty()) pass([&](Point2 p) { return p.y >= w.y0; }, at_y(w.y0));
    if (!poly.empty()) pass([&](Point2 p) { return p.y <= w.y1; }, at_y(w.y1));
    return poly;
}

void validate(const RenderOptions& opts) {
    if (!(opts.scale > 0.0) || !std::isfinite(opts.scale)) {
        throw Error(ErrorKind::InvalidArgument, "render scale must be positive");
    }
    if (!(opts.stroke_width > 0.0) || !std::isfinite(opts.stroke_width)) {
        throw Error(ErrorKind::InvalidArgument, "stroke width must be positive");
    }
    if (opts.zoom) {
        const Window w = *opts.zoom;
        if (!(w.x0 < w.x1 && w.y0 < w.y1)) throw Error(ErrorKind::InvalidArgument, "zoom window is empty");
        const double cx = std::clamp(0.0, w.x0, w.x1);
        const double cy = std::clamp(0.0, w.y0, w.y1);
        if (std::hypot(cx, cy) > 1.0) throw Error(ErrorKind::InvalidArgument, "zoom window misses the unit disk");
    }
}

}  // namespace

std::string render_svg(const SplitSegmentSet& split, const PlanarGraph* graph, const RenderOptions& opts) {
    validate(opts);
    if ((opts.color_faces || opts.label_orbits) && graph == nullptr) {
        throw Error(ErrorKind::MissingGraph, "face coloring or orbit labels need a planar graph");
    }

    const Window window =
        opts.zoom.value_or(Window{-kViewportExtent, -kViewportExtent, kViewportExtent, kViewportExtent});
    const double s = opts.scale;
    // Figure coordinates: y axis flipped so the polygon appears as drawn
    // in mathematical orientation.
    auto fx = [&](double x) { return fixed(x * s); };
    auto fy = [&](double y) { return fixed(-y * s); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed((window.x1 - window.x0) * s) +
           "\" height=\"" + fixed((window.y1 - window.y0) * s) + "\" viewBox=\"" + fx(window.x0) + " " + fy(window.y1) +
           " " + fixed((window.x1 - window.x0) * s) + " " + fixed((window.y1 - window.y0) * s) + "\">\n";

    std::vector<FaceRecord> faces;
    OrbitCensus census;
    if (graph != nullptr && (opts.color_faces || opts.label_orbits)) {
        faces = enumerate_faces(*graph);
        if (opts.symmetry) {
            census = orbit_census(faces, *opts.symmetry, opts.tol);
        } else {
            census.face_orbit.resize(faces.size());
            for (std::size_t i = 0; i < faces.size(); ++i) census.face_orbit[i] = faces[i].is_outer ? OrbitCensus::npos : i;
        }
    }

    if (opts.color_faces) {
        out += "<g id=\"faces\" stroke=\"none\">\n";
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (faces[i].is_outer) continue;
            std::vector<Point2> poly;
            poly.reserve(faces[i].boundary.size());
            for (auto h : faces[i].boundary) poly.push_back(graph->vertices()[graph->origin(h)]);
            if (opts.zoom) poly = clip_polygon(std::move(poly), window);
            if (poly.size() < 3) continue;
            out += "<polygon points=\"";
            for (std::size_t k = 0; k < poly.size(); ++k) {
                if (k > 0) out += ' ';
                out += fx(poly[k].x) + "," + fy(poly[k].y);
            }
            out += "\" fill=\"" + orbit_color(census.face_orbit[i]) + "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g id=\"segments\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fixed(opts.stroke_width) +
           "\" stroke-linecap=\"round\">\n";
    for (const Segment& seg : split.segments) {
        Point2 a = seg.p0();
        Point2 b = seg.p1();
        if (opts.zoom) {
            const auto clipped = clip_segment(a, b, window);
            if (!clipped) continue;
            std::tie(a, b) = *clipped;
        }
        out += "<line x1=\"" + fx(a.x) + "\" y1=\"" + fy(a.y) + "\" x2=\"" + fx(b.x) + "\" y2=\"" + fy(b.y) + "\"/>\n";
    }
    out += "</g>\n";

    if (opts.label_orbits) {
        const double font = std::max(2.0, 0.02 * s);
        out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" + fixed(font) +
               "\" text-anchor=\"middle\" fill=\"#000000\">\n";
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (faces[i].is_outer || !inside(window, faces[i].centroid)) continue;
            out += "<text x=\"" + fx(faces[i].centroid.x) + "\" y=\"" + fy(faces[i].centroid.y) + "\">" +
                   std::to_string(census.face_orbit[i] + 1) + "</text>\n";
        }
        out += "</g>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tilecount
