#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "test_support.hpp"

using namespace aocc;

namespace {

EventStream blank(SensorGeometry g, Timestamp t0, Timestamp t1) { return EventStream(g, {}, t0, t1); }

}  // namespace

TEST(Noise, ExpectedCount) {
    EXPECT_DOUBLE_EQ(expected_noise_count(blank(kDavis346, 0, 1000000), 5.0), 449800.0);
    EXPECT_DOUBLE_EQ(expected_noise_count(blank({10, 10}, 0, 500000), 2.0), 100.0);
}

TEST(Noise, CountWithinFourSigmaAndUniform) {
    auto s = blank(kDavis346, 0, 1000000);
    auto n = generate_noise(s, {5.0, 42});
    const double lambda = 449800.0;
    EXPECT_LE(std::abs(double(n.size()) - lambda), 4 * std::sqrt(lambda));

    std::vector<double> per_pixel(kDavis346.pixel_count());
    for (const Event& e : n.events()) per_pixel[std::size_t(e.y) * 346 + e.x] += 1;
    const double expect = double(n.size()) / double(per_pixel.size());
    double chi2 = 0;
    for (double c : per_pixel) chi2 += (c - expect) * (c - expect) / expect;
    boost::math::chi_squared dist(double(per_pixel.size() - 1));
    EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 0.001);
}

TEST(Noise, WellFormedLabeledAndInsideWindow) {
    auto n = generate_noise(blank({40, 30}, 1000, 201000), {50.0, 3});
    EXPECT_TRUE(validate(n).empty());
    ASSERT_FALSE(n.empty());
    for (std::size_t i = 0; i < n.size(); ++i) {
        EXPECT_EQ(n.label(i), Label::Noise);
        EXPECT_GE(n[i].t, 1000u);
        EXPECT_LT(n[i].t, 201000u);
    }
}

TEST(Noise, PolaritySplit) {
    auto s = blank({64, 64}, 0, 1000000);
    auto all_on = generate_noise(s, {10.0, 1, 1.0});
    for (const Event& e : all_on.events()) ASSERT_EQ(e.p, 1);
    auto half = generate_noise(s, {10.0, 1, 0.5});
    double on = 0;
    for (const Event& e : half.events()) on += e.p == 1;
    const double n = double(half.size());
    EXPECT_LE(std::abs(on - n / 2), 4 * std::sqrt(n / 4));
}

TEST(Noise, SeededDeterminism) {
    auto s = blank({32, 32}, 0, 300000);
    EXPECT_EQ(generate_noise(s, {5, 9}), generate_noise(s, {5, 9}));
    EXPECT_NE(generate_noise(s, {5, 9}), generate_noise(s, {5, 10}));
}

TEST(Noise, ZeroRateIsEmptyAndBadConfigThrows) {
    auto s = blank({8, 8}, 0, 1000);
    EXPECT_TRUE(generate_noise(s, {0.0, 1}).empty());
    EXPECT_THROW(generate_noise(s, {-1.0, 1}), std::invalid_argument);
    EXPECT_THROW(generate_noise(s, {1.0, 1, 1.5}), std::invalid_argument);
    EXPECT_THROW(generate_noise(blank({8, 8}, 5, 5), {1.0, 1}), std::invalid_argument);
}

TEST(Inject, LabelsSignalAndKeepsEverySignalEvent) {
    auto clean = aocc::testing::random_stream({32, 32}, 500, 0, 100000, 5);
    auto noisy = inject(clean, {20.0, 8});
    EXPECT_TRUE(validate(noisy).empty());
    std::vector<Event> signal;
    for (std::size_t i = 0; i < noisy.size(); ++i) {
        if (noisy.label(i) == Label::Signal) signal.push_back(noisy[i]);
    }
    EXPECT_TRUE(std::equal(signal.begin(), signal.end(), clean.events().begin(), clean.events().end()));
    EXPECT_EQ(noisy.t_start(), clean.t_start());
    EXPECT_EQ(noisy.t_end(), clean.t_end());
}

TEST(Inject, StackingKeepsExistingLabels) {
    auto clean = aocc::testing::random_stream({16, 16}, 100, 0, 100000, 5);
    auto once = inject(clean, {10.0, 1});
    auto twice = inject(once, {10.0, 2});
    std::size_t noise = 0;
    for (auto l : twice.labels()) noise += l == Label::Noise;
    EXPECT_EQ(noise, twice.size() - clean.size());
}
