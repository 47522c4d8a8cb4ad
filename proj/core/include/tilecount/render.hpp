#pragma once

#include <optional>
#include <string>

#include "tilecount/arrangement.hpp"
#include "tilecount/planar_graph.hpp"
#include "tilecount/polygon.hpp"

namespace tilecount {

/// Axis-aligned window in unit-circle coordinates.
struct Window {
    double x0;
    double y0;
    double x1;
    double y1;
};

struct RenderOptions {
    /// Figure units per unit-circle radius.
    double scale = 400.0;
    double stroke_width = 1.0;
    bool color_faces = false;
    bool label_orbits = false;
    std::optional<Window> zoom;
    /// Polygon whose rotation defines face orbits for coloring and labels.
    /// Without it every face is its own orbit.
    std::optional<PolygonSpec> symmetry;
    Tolerance tol;
};

/// Half-width of the default viewport around the unit disk.
inline constexpr double kViewportExtent = 1.05;

/// SVG 1.1 document: one <line> per split segment (clipped to the zoom
/// window when one is given), one filled <polygon> per inner face when
/// color_faces is set, one <text> per inner face when label_orbits is set.
/// Output is a pure function of the inputs.
///
/// Throws Error(MissingGraph) if faces or labels are requested without a
/// graph, Error(InvalidArgument) for a non-positive scale or a zoom window
/// that is empty or misses the unit disk.
std::string render_svg(const SplitSegmentSet& split, const PlanarGraph* graph, const RenderOptions& opts);

}  // namespace tilecount
