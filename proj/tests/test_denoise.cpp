#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace aocc;
using aocc::testing::naive_dwf;
using aocc::testing::random_stream;

TEST(Dwf, MatchesHistoryRescanOracle) {
    struct Case {
        SensorGeometry g;
        std::size_t n;
        std::uint32_t radius, buffer, support;
        bool l1;
    };
    const Case cases[] = {
        {{32, 32}, 3000, 1, 200, 1, false}, {{32, 32}, 3000, 2, 10, 1, false},
        {{64, 48}, 4000, 4, 50, 2, false},  {{64, 48}, 4000, 3, 1, 1, true},
        {{16, 16}, 2000, 5, 30, 3, true},   {{346, 260}, 5000, 14, 200, 1, false},
    };
    std::uint64_t seed = 100;
    for (const auto& c : cases) {
        auto s = random_stream(c.g, c.n, 0, 1000000, ++seed);
        auto cfg = DenoiserConfig::dwf(c.radius, c.buffer, c.support);
        cfg.dwf_norm = c.l1 ? DistanceNorm::Manhattan : DistanceNorm::Chebyshev;
        EXPECT_EQ(dwf_mask(s, cfg), naive_dwf(s, c.radius, c.buffer, c.support, c.l1))
            << "radius " << c.radius << " buffer " << c.buffer;
    }
}

TEST(Dwf, FirstEventRejectedAndNeighbourAccepted) {
    EventStream s({8, 8}, {{0, 3, 3, 1}, {1, 4, 4, 1}, {2, 7, 7, 1}}, 0, 3);
    EXPECT_EQ(dwf_mask(s, DenoiserConfig::dwf(1)), (std::vector<bool>{false, true, false}));
}

// With bounded windows, their contents depend on earlier decisions, so a larger
// radius need not keep a superset. Unbounded windows hold the whole past.
TEST(Dwf, LargerRadiusKeepsSupersetWithFullHistory) {
    auto s = random_stream({64, 64}, 3000, 0, 1000000, 9);
    auto prev = dwf_mask(s, DenoiserConfig::dwf(1, 3000));
    for (std::uint32_t r = 2; r <= 8; ++r) {
        auto cur = dwf_mask(s, DenoiserConfig::dwf(r, 3000));
        for (std::size_t i = 0; i < cur.size(); ++i) ASSERT_TRUE(!prev[i] || cur[i]) << r;
        prev = cur;
    }
}

TEST(Dwf, OutputIsSubsequenceWithLabels) {
    auto s = random_stream({32, 32}, 1000, 0, 100000, 2, true);
    auto out = dwf_denoise(s, DenoiserConfig::dwf(3));
    EXPECT_TRUE(out.labeled());
    EXPECT_EQ(out.t_end(), s.t_end());
    EXPECT_NO_THROW(confusion(s, out));
}

TEST(Dwf, ConfigValidation) {
    EXPECT_THROW(validate_config(DenoiserConfig::dwf(0), {8, 8}), std::invalid_argument);
    EXPECT_THROW(validate_config(DenoiserConfig::dwf(9), {8, 8}), std::invalid_argument);
    EXPECT_THROW(validate_config(DenoiserConfig::dwf(2, 0), {8, 8}), std::invalid_argument);
    EXPECT_NO_THROW(validate_config(DenoiserConfig::dwf(8), {8, 8}));
}

TEST(Threshold, KeepsScoreAtOrAboveTau) {
    std::vector<double> sc{0.1, 0.5, 0.49, 0.9};
    EXPECT_EQ(threshold_mask(sc, 0.5), (std::vector<bool>{false, true, false, true}));
    EXPECT_EQ(threshold_mask(sc, 0.0), std::vector<bool>(4, true));
}

TEST(Threshold, ScoredStreamLengthMismatchThrows) {
    auto s = random_stream({8, 8}, 5, 0, 100, 1);
    EXPECT_THROW(ScoredStream(s, {0.5}), std::invalid_argument);
}

TEST(OracleScores, RangeDeterminismAndSeparation) {
    auto s = random_stream({32, 32}, 5000, 0, 100000, 4, true);
    auto a = oracle_scores(s, 0.4, 7);
    EXPECT_EQ(a.scores, oracle_scores(s, 0.4, 7).scores);
    double sig = 0, noi = 0, ns = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ASSERT_GE(a.scores[i], 0.0);
        ASSERT_LE(a.scores[i], 1.0);
        (s.label(i) == Label::Signal ? sig : noi) += a.scores[i];
        ns += s.label(i) == Label::Signal;
    }
    EXPECT_GT(sig / ns, noi / (double(s.size()) - ns));
    auto exact = oracle_scores(s, 0.0, 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(exact.scores[i], s.label(i) == Label::Signal ? 1.0 : 0.0);
    }
    EXPECT_THROW(oracle_scores(s.without_labels(), 0.4, 1), MissingLabelError);
}

TEST(Denoise, DispatchAndGrids) {
    auto s = random_stream({16, 16}, 300, 0, 10000, 3, true);
    EXPECT_EQ(denoise(s, DenoiserConfig::passthrough()), s);
    EXPECT_EQ(denoise_mask(s, DenoiserConfig::dwf(2)), dwf_mask(s, DenoiserConfig::dwf(2)));
    auto sc = oracle_scores(s, 0.3, 2).scores;
    EXPECT_EQ(denoise_mask(s, DenoiserConfig::score_threshold(0.6), sc), threshold_mask(sc, 0.6));
    EXPECT_THROW(denoise(s, DenoiserConfig::score_threshold(0.6)), std::invalid_argument);

    auto taus = default_threshold_grid();
    ASSERT_EQ(taus.size(), 49u);
    EXPECT_DOUBLE_EQ(taus.front(), 0.02);
    EXPECT_DOUBLE_EQ(taus.back(), 0.98);
    EXPECT_EQ(default_dwf_radius_grid(), (std::vector<std::uint32_t>{2, 4, 6, 8, 10, 12, 14}));
}
