#pragma once

#include <cstdint>
#include <vector>

#include "tilecount/geom.hpp"

namespace tilecount {

/// Regular polygon with N = 2n sides, corners on the unit circle.
class PolygonSpec {
public:
    /// Throws Error(InvalidArgument) for n < 2.
    explicit PolygonSpec(int n);

    int n() const { return n_; }
    int sides() const { return 2 * n_; }

private:
    int n_;
};

/// Closed-form counts of the chords of a regular 2n-gon.
struct DiagonalCensus {
    std::int64_t parallel;       // side-parallel diagonals, n(n-2)
    std::int64_t total;          // all diagonals, n(2n-3)
    std::int64_t excluded;       // the rest, n(n-1)
    std::int64_t per_direction;  // N/2 - 2
    std::int64_t directions;     // N/2
};

DiagonalCensus diagonal_census(const PolygonSpec& spec);

/// Corner k at angle pi*k/n, k = 0..2n-1.
std::vector<Point2> corners(const PolygonSpec& spec);

/// The 2n perimeter edges (corner e -> e+1) followed by the side-parallel
/// diagonals (corner e-k -> e+1+k for e < n, 1 <= k <= n-2).
std::vector<Segment> base_segments(const PolygonSpec& spec, Tolerance tol = {});

}  // namespace tilecount
