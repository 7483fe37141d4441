#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace aocc;
using aocc::testing::naive_contrast;
using aocc::testing::near_rel;
using aocc::testing::random_frame;

TEST(Frame, HalfOpenWindowAnyPolarity) {
    EventStream s({4, 4}, {{0, 0, 0, 1}, {5, 1, 1, -1}, {10, 2, 2, 1}}, 0, 20);
    auto f = accumulate_frame(s, 0, 10);
    EXPECT_EQ(f.at(0, 0), kPixelOn);
    EXPECT_EQ(f.at(1, 1), kPixelOn);
    EXPECT_EQ(f.at(2, 2), 0);
    EXPECT_EQ(f.on_pixel_count(), 2u);
    EXPECT_THROW(accumulate_frame(s, 0, 21), RangeError);
}

TEST(Sobel, HandComputedValues) {
    EventFrame f({5, 5}, 0, 1);
    f.at(2, 2) = kPixelOn;
    auto g = sobel_gradient(f);
    EXPECT_DOUBLE_EQ(g.at(2, 2), 0.0);
    EXPECT_DOUBLE_EQ(g.at(3, 2), 510.0);
    EXPECT_DOUBLE_EQ(g.at(2, 1), 510.0);
    EXPECT_NEAR(g.at(3, 3), 360.62445840513925, 1e-9);
    EXPECT_DOUBLE_EQ(g.at(0, 0), 0.0);

    EventFrame edge({6, 4}, 0, 1);
    for (std::uint32_t y = 0; y < 4; ++y)
        for (std::uint32_t x = 0; x < 3; ++x) edge.at(x, y) = kPixelOn;
    auto ge = sobel_gradient(edge);
    EXPECT_DOUBLE_EQ(ge.at(2, 0), 1020.0);  // replicate padding keeps the border row full
    EXPECT_DOUBLE_EQ(ge.at(3, 3), 1020.0);
    EXPECT_DOUBLE_EQ(ge.at(0, 1), 0.0);
}

TEST(Contrast, UniformFramesAreExactlyZero) {
    for (auto v : {std::uint8_t(0), kPixelOn}) {
        EventFrame f({17, 9}, 0, 1);
        std::fill(f.occupancy.begin(), f.occupancy.end(), v);
        EXPECT_EQ(contrast(f), 0.0);
    }
}

TEST(Contrast, MatchesNaiveOracleAcrossDensities) {
    // covers both the sparse (few on pixels) and dense evaluation paths
    const SensorGeometry sizes[] = {{2, 1}, {1, 7}, {3, 3}, {31, 17}, {64, 64}, {346, 260}};
    const double densities[] = {0.0005, 0.01, 0.04, 0.06, 0.3, 0.9};
    std::uint64_t seed = 1;
    for (auto g : sizes) {
        for (double d : densities) {
            auto f = random_frame(g, d, ++seed);
            double ref = naive_contrast(f);
            EXPECT_TRUE(near_rel(contrast(f), ref, 1e-9)) << g.width << "x" << g.height << " d=" << d;
            EXPECT_TRUE(near_rel(contrast(sobel_gradient(f)), ref, 1e-9));
        }
    }
}

TEST(Contrast, SinglePixelFrameIsDegenerate) {
    EventFrame f({1, 1}, 0, 1);
    EXPECT_THROW(contrast(f), DegenerateInputError);
}

TEST(Contrast, InvariantUnderFlipsAndTranspose) {
    auto f = random_frame({40, 23}, 0.2, 77);
    const auto w = f.geometry.width, h = f.geometry.height;
    EventFrame hflip(f.geometry, 0, 1), vflip(f.geometry, 0, 1), tr({h, w}, 0, 1);
    for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            hflip.at(w - 1 - x, y) = f.at(x, y);
            vflip.at(x, h - 1 - y) = f.at(x, y);
            tr.at(y, x) = f.at(x, y);
        }
    }
    const double c = contrast(f);
    EXPECT_TRUE(near_rel(contrast(hflip), c, 1e-12));
    EXPECT_TRUE(near_rel(contrast(vflip), c, 1e-12));
    EXPECT_TRUE(near_rel(contrast(tr), c, 1e-12));
}

TEST(Contrast, BoundedAndNonNegative) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        double c = contrast(random_frame({50, 40}, 0.05 * double(s), s));
        EXPECT_GE(c, 0.0);
        EXPECT_LT(c, kContrastUpperBound);
    }
}

TEST(Pgm, HeaderAndPayload) {
    EventFrame f({3, 2}, 0, 1);
    f.at(1, 1) = kPixelOn;
    std::ostringstream out;
    write_pgm(f, out);
    const std::string s = out.str();
    EXPECT_EQ(s.substr(0, 11), "P5\n3 2\n255\n");
    EXPECT_EQ(s.size(), 11u + 6u);
    EXPECT_EQ((unsigned char)s.back(), 0u);
    EXPECT_EQ((unsigned char)s[11 + 4], 255u);
}
