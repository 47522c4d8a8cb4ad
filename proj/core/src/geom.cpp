#include "tilecount/geom.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "tilecount/error.hpp"

namespace tilecount {

namespace {

double determinant(double a00, double a01, double a10, double a11) { return a00 * a11 - a01 * a10; }

}  // namespace

Tolerance Tolerance::make(double point_fuzzy) {
    if (!(point_fuzzy > 0.0 && point_fuzzy < 1e-3)) {
        throw Error(ErrorKind::InvalidArgument,
                    "point_fuzzy must lie in (0, 1e-3), got " + std::to_string(point_fuzzy));
    }
    return Tolerance{point_fuzzy};
}

Segment::Segment(Point2 p0, Point2 p1, Tolerance tol) : p0_(p0), p1_(p1), length_(distance(p0, p1)) {
    if (!(length_ > tol.point_fuzzy)) {
        throw Error(ErrorKind::NumericalDegeneracy,
                    "segment (" + std::to_string(p0.x) + "," + std::to_string(p0.y) + ")-(" +
                        std::to_string(p1.x) + "," + std::to_string(p1.y) + ") is shorter than the fuzz");
    }
}

const char* to_string(ParamClass c) noexcept {
    switch (c) {
        case ParamClass::Interior: return "Interior";
        case ParamClass::End: return "End";
        case ParamClass::Outside: return "Outside";
    }
    return "Unknown";
}

IntersectionOutcome intersect(const Segment& a, const Segment& b, Tolerance tol) {
    const double a00 = a.dx();
    const double a01 = -b.dx();
    const double a10 = a.dy();
    const double a11 = -b.dy();
    const double rhs0 = b.p0().x - a.p0().x;
    const double rhs1 = b.p0().y - a.p0().y;

    const double det = determinant(a00, a01, a10, a11);
    if (std::fabs(det) < tol.point_fuzzy * a.length() * b.length()) return std::nullopt;

    return LineParams{determinant(rhs0, a01, rhs1, a11) / det, determinant(a00, rhs0, a10, rhs1) / det};
}

ParamClass classify_param(double t, Tolerance tol) {
    const double fuzz = tol.point_fuzzy;
    if (t > fuzz && t < 1.0 - fuzz) return ParamClass::Interior;
    if (std::fabs(t) < fuzz || std::fabs(t - 1.0) < fuzz) return ParamClass::End;
    return ParamClass::Outside;
}

std::vector<Segment> split_at_params(const Segment& s, std::vector<double> ts, Tolerance tol) {
    if (ts.empty()) return {s};
#ifndef NDEBUG
    for (double t : ts) assert(classify_param(t, tol) == ParamClass::Interior);
#endif
    ts.push_back(0.0);
    ts.push_back(1.0);
    std::sort(ts.begin(), ts.end());

    // Walk the sorted list; in a near-duplicate pair drop the later entry
    // while at the head (keeps 0 exact), otherwise drop the earlier one
    // (keeps 1 exact at the tail).
    for (std::size_t i = 0; i + 1 < ts.size();) {
        if (std::fabs(ts[i] - ts[i + 1]) < tol.point_fuzzy) {
            ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(i == 0 ? 1 : i));
        } else {
            ++i;
        }
    }

    std::vector<Segment> out;
    out.reserve(ts.size() - 1);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        out.emplace_back(point_at(s, ts[i]), point_at(s, ts[i + 1]), tol);
    }
    return out;
}

Point2 rotate(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    return {c * p.x - sn * p.y, sn * p.x + c * p.y};
}

Segment rotate(const Segment& s, double angle, Tolerance tol) {
    return Segment(rotate(s.p0(), angle), rotate(s.p1(), angle), tol);
}

}  // namespace tilecount
