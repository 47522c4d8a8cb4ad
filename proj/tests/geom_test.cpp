#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "tilecount/error.hpp"
#include "tilecount/geom.hpp"

using namespace tilecount;

namespace {

Segment seg(double x0, double y0, double x1, double y1) { return Segment({x0, y0}, {x1, y1}); }

}  // namespace

TEST(Intersect, SymmetricCrossing) {
    const auto r = intersect(seg(0, 0, 1, 1), seg(0, 1, 1, 0));
    ASSERT_TRUE(r);
    EXPECT_DOUBLE_EQ(r->t, 0.5);
    EXPECT_DOUBLE_EQ(r->u, 0.5);
}

TEST(Intersect, HorizontalPairIsParallel) { EXPECT_FALSE(intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1))); }

TEST(Intersect, EndpointTouch) {
    const auto r = intersect(seg(0, 0, 1, 0), seg(1, 0, 1, 1));
    ASSERT_TRUE(r);
    EXPECT_DOUBLE_EQ(r->t, 1.0);
    EXPECT_DOUBLE_EQ(r->u, 0.0);
}

TEST(Intersect, NearParallelBelowDeterminantScaleIsParallel) {
    // |det| = 1e-12 < 1e-10 * |a| * |b|
    EXPECT_FALSE(intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1 + 1e-12)));
    EXPECT_TRUE(intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1 + 1e-6)));
}

TEST(PointAt, EndpointsAndMidpoint) {
    const Segment s = seg(0, 0, 2, 0);
    EXPECT_EQ(point_at(s, 0.0), (Point2{0, 0}));
    EXPECT_EQ(point_at(s, 1.0), (Point2{2, 0}));
    EXPECT_EQ(point_at(s, 0.5), (Point2{1, 0}));
}

TEST(ClassifyParam, Examples) {
    EXPECT_EQ(classify_param(0.5), ParamClass::Interior);
    EXPECT_EQ(classify_param(1e-12), ParamClass::End);
    EXPECT_EQ(classify_param(-0.5), ParamClass::Outside);
    EXPECT_EQ(classify_param(1.0 - 1e-12), ParamClass::End);
    EXPECT_EQ(classify_param(1.5), ParamClass::Outside);
    // Exactly at the fuzz: neither strictly inside nor strictly within it.
    EXPECT_EQ(classify_param(1e-10), ParamClass::Outside);
}

TEST(ClassifyParam, CustomTolerance) {
    const Tolerance loose = Tolerance::make(1e-4);
    EXPECT_EQ(classify_param(5e-5, loose), ParamClass::End);
    EXPECT_EQ(classify_param(5e-5), ParamClass::Interior);
}

TEST(SplitAtParams, NoCutReturnsSegment) {
    const auto parts = split_at_params(seg(0, 0, 2, 0), {});
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].p0(), (Point2{0, 0}));
    EXPECT_EQ(parts[0].p1(), (Point2{2, 0}));
}

TEST(SplitAtParams, SingleCut) {
    const auto parts = split_at_params(seg(0, 0, 2, 0), {0.5});
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].p1(), (Point2{1, 0}));
    EXPECT_EQ(parts[1].p0(), (Point2{1, 0}));
    EXPECT_EQ(parts[1].p1(), (Point2{2, 0}));
}

TEST(SplitAtParams, NearDuplicatesMerge) {
    const auto parts = split_at_params(seg(0, 0, 2, 0), {0.7, 0.3 + 1e-12, 0.3});
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_NEAR(parts[0].p1().x, 0.6, 1e-11);
    EXPECT_NEAR(parts[1].p1().x, 1.4, 1e-12);
    EXPECT_EQ(parts[0].p0(), (Point2{0, 0}));
    EXPECT_EQ(parts[2].p1(), (Point2{2, 0}));
}

TEST(Segment, RejectsDegenerate) {
    try {
        seg(0.5, 0.5, 0.5, 0.5 + 1e-11);
        FAIL() << "expected NumericalDegeneracy";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NumericalDegeneracy);
    }
}

TEST(Tolerance, RangeChecked) {
    EXPECT_THROW(Tolerance::make(0.0), Error);
    EXPECT_THROW(Tolerance::make(1e-3), Error);
    EXPECT_THROW(Tolerance::make(-1e-10), Error);
    EXPECT_DOUBLE_EQ(Tolerance::make(1e-8).point_fuzzy, 1e-8);
}

// Properties over random unit-disk segments.

class GeomProperty : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240917};
    std::uniform_real_distribution<double> coord{-0.7, 0.7};

    Segment random_segment() {
        for (;;) {
            const Point2 a{coord(rng), coord(rng)};
            const Point2 b{coord(rng), coord(rng)};
            if (distance(a, b) > 1e-3) return Segment(a, b);
        }
    }
};

TEST_F(GeomProperty, SplitConservesLength) {
    std::uniform_real_distribution<double> param(1e-6, 1 - 1e-6);
    std::uniform_int_distribution<int> count(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        const Segment s = random_segment();
        std::vector<double> ts(static_cast<std::size_t>(count(rng)));
        for (double& t : ts) t = param(rng);
        const auto parts = split_at_params(s, ts);
        const double total = std::accumulate(parts.begin(), parts.end(), 0.0,
                                             [](double acc, const Segment& p) { return acc + p.length(); });
        EXPECT_NEAR(total, s.length(), 1e-9);
        EXPECT_EQ(parts.front().p0(), s.p0());
        EXPECT_EQ(parts.back().p1(), s.p1());
        for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_EQ(parts[i - 1].p1(), parts[i].p0());
    }
}

TEST_F(GeomProperty, IntersectionIsSymmetric) {
    for (int trial = 0; trial < 2000; ++trial) {
        const Segment a = random_segment();
        const Segment b = random_segment();
        const auto ab = intersect(a, b);
        const auto ba = intersect(b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (!ab) continue;
        if (std::fabs(ab->t) > 1e3 || std::fabs(ab->u) > 1e3) continue;  // nearly parallel, far away
        EXPECT_NEAR(ab->t, ba->u, 1e-9);
        EXPECT_NEAR(ab->u, ba->t, 1e-9);
        if (std::fabs(ab->t) < 10 && std::fabs(ab->u) < 10) {
            EXPECT_LE(distance(point_at(a, ab->t), point_at(b, ab->u)), 1e-9);
        }
    }
}

TEST_F(GeomProperty, ClassifyParamPartitionsTheLine) {
    std::uniform_real_distribution<double> wide(-2.0, 3.0);
    std::uniform_real_distribution<double> tiny(-3e-10, 3e-10);
    for (int trial = 0; trial < 10000; ++trial) {
        const double t = trial % 2 ? wide(rng) : (trial % 4 ? tiny(rng) : 1.0 + tiny(rng));
        const ParamClass c = classify_param(t);
        const bool interior = t > 1e-10 && t < 1 - 1e-10;
        const bool end = std::fabs(t) < 1e-10 || std::fabs(t - 1) < 1e-10;
        EXPECT_EQ(c == ParamClass::Interior, interior);
        EXPECT_EQ(c == ParamClass::End, end);
        EXPECT_EQ(c == ParamClass::Outside, !interior && !end);
    }
}
