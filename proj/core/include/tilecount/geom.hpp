#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace tilecount {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Absolute distance threshold under which two computed points coincide.
/// Everything lives in the unit disk, so absolute and relative scales agree.
struct Tolerance {
    double point_fuzzy = 1e-10;

    /// Throws Error(InvalidArgument) unless 0 < point_fuzzy < 1e-3.
    static Tolerance make(double point_fuzzy);

    bool near(Point2 a, Point2 b) const { return distance(a, b) <= point_fuzzy; }
};

/// A non-degenerate straight segment p0 -> p1, parametrized as
/// p0 + t (p1 - p0) for t in [0, 1].
class Segment {
public:
    /// Throws Error(NumericalDegeneracy) when |p1 - p0| <= tol.point_fuzzy.
    Segment(Point2 p0, Point2 p1, Tolerance tol = {});

    Point2 p0() const { return p0_; }
    Point2 p1() const { return p1_; }
    double length() const { return length_; }
    double dx() const { return p1_.x - p0_.x; }
    double dy() const { return p1_.y - p0_.y; }

private:
    Point2 p0_;
    Point2 p1_;
    double length_;
};

/// Line parameters of a crossing: `t` along the receiver, `u` along the argument.
struct LineParams {
    double t;
    double u;
};

/// std::nullopt means the supporting lines are parallel (within tolerance).
using IntersectionOutcome = std::optional<LineParams>;

enum class ParamClass { Interior, End, Outside };

const char* to_string(ParamClass c) noexcept;

/// Solves a.p0 + t*(a.p1-a.p0) = b.p0 + u*(b.p1-b.p0) by Cramer's rule.
/// Parallel when |det| < point_fuzzy * len(a) * len(b).
IntersectionOutcome intersect(const Segment& a, const Segment& b, Tolerance tol = {});

/// t*p1 + (1-t)*p0; exact at t = 0 and t = 1.
inline Point2 point_at(const Segment& s, double t) {
    return {t * s.p1().x + (1.0 - t) * s.p0().x, t * s.p1().y + (1.0 - t) * s.p0().y};
}

/// Interior: fuzz < t < 1-fuzz. End: within fuzz of 0 or 1. Outside: the rest.
ParamClass classify_param(double t, Tolerance tol = {});

/// Cuts `s` at every parameter in `ts`. Parameters closer than point_fuzzy
/// after sorting are merged (the earlier one survives except at t = 0).
/// Every t must be Interior; this is asserted in debug builds.
std::vector<Segment> split_at_params(const Segment& s, std::vector<double> ts, Tolerance tol = {});

/// Rotation about the origin by `angle` radians.
Point2 rotate(Point2 p, double angle);
Segment rotate(const Segment& s, double angle, Tolerance tol = {});

}  // namespace tilecount
