#include <gtest/gtest.h>

#include <random>

#include "tangency/geom.hpp"

using namespace tangency;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Segment seg(long a, long b, long c, long d) { return {pt(a, b), pt(c, d)}; }

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
    EXPECT_EQ(to_string(parse_rational("+7")), "7");
    EXPECT_THROW(parse_rational("2/-4"), std::invalid_argument);
}

TEST(Rational, RejectsMalformed) {
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Orient, Examples) {
    EXPECT_EQ(orient(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
    EXPECT_EQ(orient(pt(0, 0), pt(1, 1), pt(2, 2)), 0);
    EXPECT_EQ(orient(pt(0, 0), pt(0, 1), pt(1, 0)), -1);
}

TEST(Orient, AntisymmetricUnderSwap) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 500; ++i) {
        Point p{ratio(d(rng), 3), Rational(d(rng))};
        Point q{Rational(d(rng)), ratio(d(rng), 7)};
        Point r{Rational(d(rng)), Rational(d(rng))};
        EXPECT_EQ(orient(p, q, r), -orient(p, r, q));
    }
}

TEST(SegmentIntersect, Examples) {
    auto x = segment_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0));
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, pt(1, 1));
    EXPECT_FALSE(segment_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
    EXPECT_THROW(segment_intersect(seg(0, 0, 2, 0), seg(1, 0, 3, 0)), OverlapError);
}

TEST(SegmentIntersect, ClosedEndpoints) {
    auto t = segment_intersect(seg(0, 0, 2, 0), seg(2, 0, 3, 5));
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, pt(2, 0));
    auto c = segment_intersect(seg(0, 0, 2, 0), seg(2, 0, 4, 0));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, pt(2, 0));
}

TEST(SegmentIntersect, VerticalOverlapThrows) {
    EXPECT_THROW(segment_intersect(seg(0, 0, 0, 2), seg(0, 1, 0, 3)), OverlapError);
}

TEST(SegmentIntersect, SymmetricAndOnBoth) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    int hits = 0;
    for (int i = 0; i < 3000; ++i) {
        Segment a{pt(d(rng), d(rng)), pt(d(rng), d(rng))};
        Segment b{pt(d(rng), d(rng)), pt(d(rng), d(rng))};
        if (a.p == a.q || b.p == b.q) continue;
        std::optional<Point> ab;
        std::optional<Point> ba;
        bool t1 = false;
        bool t2 = false;
        try {
            ab = segment_intersect(a, b);
        } catch (const OverlapError&) {
            t1 = true;
        }
        try {
            ba = segment_intersect(b, a);
        } catch (const OverlapError&) {
            t2 = true;
        }
        ASSERT_EQ(t1, t2);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
            ++hits;
            EXPECT_EQ(*ab, *ba);
            EXPECT_TRUE(on_segment(a, *ab));
            EXPECT_TRUE(on_segment(b, *ab));
        }
    }
    EXPECT_GT(hits, 100);
}

TEST(Angles, CcwBetween) {
    EXPECT_TRUE(strictly_ccw_between(pt(1, 0), pt(-1, 0), pt(0, 1)));
    EXPECT_FALSE(strictly_ccw_between(pt(1, 0), pt(-1, 0), pt(0, -1)));
    EXPECT_FALSE(strictly_ccw_between(pt(1, 0), pt(-1, 0), pt(2, 0)));
    EXPECT_FALSE(strictly_ccw_between(pt(1, 0), pt(-1, 0), pt(-3, 0)));
    EXPECT_TRUE(strictly_ccw_between(pt(0, 1), pt(1, 0), pt(-1, -1)));
    EXPECT_FALSE(strictly_ccw_between(pt(0, 1), pt(1, 0), pt(1, 1)));
}
