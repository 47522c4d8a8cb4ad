#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <string>

#include "tilecount/error.hpp"
#include "tilecount/render.hpp"

using namespace tilecount;

namespace {

std::size_t count_of(const std::string& doc, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = doc.find(needle); pos != std::string::npos; pos = doc.find(needle, pos + 1)) ++n;
    return n;
}

SplitSegmentSet split_for(int n) { return split_all_fast(base_segments(PolygonSpec(n))); }

// All x/y coordinates of <line> and <polygon> elements, in figure units.
std::vector<std::pair<double, double>> coordinates(const std::string& doc) {
    std::vector<std::pair<double, double>> out;
    const std::regex line(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
    for (auto it = std::sregex_iterator(doc.begin(), doc.end(), line); it != std::sregex_iterator(); ++it) {
        out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
        out.emplace_back(std::stod((*it)[3]), std::stod((*it)[4]));
    }
    const std::regex poly(R"re(<polygon points="([^"]*)")re");
    const std::regex pair(R"re(([-0-9.]+),([-0-9.]+))re");
    for (auto it = std::sregex_iterator(doc.begin(), doc.end(), poly); it != std::sregex_iterator(); ++it) {
        const std::string pts = (*it)[1];
        for (auto p = std::sregex_iterator(pts.begin(), pts.end(), pair); p != std::sregex_iterator(); ++p) {
            out.emplace_back(std::stod((*p)[1]), std::stod((*p)[2]));
        }
    }
    return out;
}

}  // namespace

TEST(RenderSvg, HexagonHasOneLinePerSegment) {
    const std::string doc = render_svg(split_for(3), nullptr, {});
    EXPECT_EQ(count_of(doc, "<line "), 12u);
    EXPECT_EQ(count_of(doc, "<polygon "), 0u);
    EXPECT_EQ(doc.rfind("<?xml", 0), 0u);
    EXPECT_NE(doc.find("version=\"1.1\""), std::string::npos);
    EXPECT_NE(doc.find("viewBox=\"-420.000000 -420.000000 840.000000 840.000000\""), std::string::npos);
}

TEST(RenderSvg, SquareSnapshot) {
    const std::string doc = render_svg(split_for(2), nullptr, {});
    EXPECT_EQ(count_of(doc, "<line "), 4u);
    EXPECT_NE(doc.find(R"(<line x1="400.000000" y1="0.000000" x2="0.000000" y2="-400.000000"/>)"), std::string::npos);
    EXPECT_NE(doc.find(R"(<line x1="0.000000" y1="400.000000" x2="400.000000" y2="0.000000"/>)"), std::string::npos);
    EXPECT_FALSE(std::regex_search(doc, std::regex(R"([0-9][eE][-+]?[0-9])")));  // no exponent notation
}

TEST(RenderSvg, ZoomClipsToWindow) {
    const auto split = split_for(10);
    RenderOptions opts;
    opts.zoom = Window{0.5, 0.0, 1.0, 0.5};
    const std::string doc = render_svg(split, nullptr, opts);
    const auto lines = count_of(doc, "<line ");
    EXPECT_GT(lines, 0u);
    EXPECT_LT(lines, split.size());
    for (auto [x, y] : coordinates(doc)) {
        EXPECT_GE(x, 0.5 * 400 - 1e-6);
        EXPECT_LE(x, 1.0 * 400 + 1e-6);
        EXPECT_GE(-y, 0.0 - 1e-6);
        EXPECT_LE(-y, 0.5 * 400 + 1e-6);
    }
}

TEST(RenderSvg, FacesAddOnePolygonPerTile) {
    const PolygonSpec spec(5);
    const auto split = split_for(5);
    const auto graph = build_graph(split);
    RenderOptions opts;
    opts.color_faces = true;
    opts.symmetry = spec;
    const std::string doc = render_svg(split, &graph, opts);
    EXPECT_EQ(count_of(doc, "<line "), 80u);
    EXPECT_EQ(count_of(doc, "<polygon "), 50u);

    // one color per orbit: 5 orbits of 10 tiles
    std::map<std::string, int> colors;
    const std::regex fill(R"re(fill="(#[0-9a-f]{6})")re");
    for (auto it = std::sregex_iterator(doc.begin(), doc.end(), fill); it != std::sregex_iterator(); ++it) ++colors[(*it)[1]];
    EXPECT_EQ(colors.size(), 5u);
    for (const auto& [c, k] : colors) EXPECT_EQ(k, 10) << c;
}

TEST(RenderSvg, LabelsNumberTheOrbits) {
    const PolygonSpec spec(4);
    const auto split = split_for(4);
    const auto graph = build_graph(split);
    RenderOptions opts;
    opts.label_orbits = true;
    opts.symmetry = spec;
    const std::string doc = render_svg(split, &graph, opts);
    EXPECT_EQ(count_of(doc, "<text "), 25u);
    EXPECT_EQ(count_of(doc, "<line "), 48u);
}

TEST(RenderSvg, CoordinatesInsideViewport) {
    const auto split = split_for(7);
    const auto graph = build_graph(split);
    RenderOptions opts;
    opts.color_faces = true;
    opts.scale = 123.0;
    const std::string doc = render_svg(split, &graph, opts);
    for (auto [x, y] : coordinates(doc)) {
        EXPECT_LE(std::fabs(x), kViewportExtent * 123.0);
        EXPECT_LE(std::fabs(y), kViewportExtent * 123.0);
    }
}

TEST(RenderSvg, Deterministic) {
    const auto split = split_for(6);
    const auto graph = build_graph(split);
    RenderOptions opts;
    opts.color_faces = true;
    opts.symmetry = PolygonSpec(6);
    EXPECT_EQ(render_svg(split, &graph, opts), render_svg(split_for(6), &graph, opts));
}

TEST(RenderSvg, ErrorPaths) {
    const auto split = split_for(3);
    RenderOptions faces;
    faces.color_faces = true;
    try {
        render_svg(split, nullptr, faces);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingGraph);
    }
    RenderOptions far;
    far.zoom = Window{2.0, 2.0, 3.0, 3.0};
    EXPECT_THROW(render_svg(split, nullptr, far), Error);
    RenderOptions bad_scale;
    bad_scale.scale = 0.0;
    EXPECT_THROW(render_svg(split, nullptr, bad_scale), Error);
}
