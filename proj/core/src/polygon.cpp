#include "tilecount/polygon.hpp"

#include <numbers>
#include <string>

#include "tilecount/error.hpp"

namespace tilecount {

PolygonSpec::PolygonSpec(int n) : n_(n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "polygon half-side count n must be >= 2, got " + std::to_string(n));
}

DiagonalCensus diagonal_census(const PolygonSpec& spec) {
    const std::int64_t n = spec.n();
    return DiagonalCensus{
        .parallel = n * (n - 2),
        .total = n * (2 * n - 3),
        .excluded = n * (n - 1),
        .per_direction = n - 2,
        .directions = n,
    };
}

std::vector<Point2> corners(const PolygonSpec& spec) {
    const int sides = spec.sides();
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
        const double angle = std::numbers::pi * k / spec.n();
        out.push_back({std::cos(angle), std::sin(angle)});
    }
    return out;
}

std::vector<Segment> base_segments(const PolygonSpec& spec, Tolerance tol) {
    const int n = spec.n();
    const int sides = spec.sides();
    const auto corner = corners(spec);
    // Indices reduced mod 2n so shared endpoints are bit-identical.
    auto at = [&](int k) { return corner[static_cast<std::size_t>(((k % sides) + sides) % sides)]; };

    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(sides + n * (n - 2)));
    for (int e = 0; e < sides; ++e) out.emplace_back(at(e), at(e + 1), tol);
    for (int e = 0; e < n; ++e) {
        for (int k = 1; k < n - 1; ++k) out.emplace_back(at(e - k), at(e + 1 + k), tol);
    }
    return out;
}

}  // namespace tilecount
