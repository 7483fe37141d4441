#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace aocc;
using aocc::testing::random_stream;

namespace {

EventStream tiny() {
    return EventStream({8, 8}, {{10, 1, 1, 1}, {20, 2, 2, -1}, {20, 3, 3, 1}, {30, 4, 4, 1}}, 0,
                       40);
}

}  // namespace

TEST(EventStream, ValidStreamHasNoViolations) { EXPECT_TRUE(validate(tiny()).empty()); }

TEST(EventStream, ReportsEachKindOfViolation) {
    EventStream s({4, 4}, {{5, 0, 0, 1}, {3, 9, 0, 1}, {6, 1, 1, 0}}, 4, 5, {Label::Signal});
    auto v = validate(s);
    auto has = [&](Violation::Kind k) {
        return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
    };
    EXPECT_TRUE(has(Violation::Kind::Ordering));
    EXPECT_TRUE(has(Violation::Kind::Bounds));
    EXPECT_TRUE(has(Violation::Kind::Polarity));
    EXPECT_TRUE(has(Violation::Kind::Window));
    EXPECT_TRUE(has(Violation::Kind::LabelCount));
    EXPECT_THROW(require_valid(s), std::invalid_argument);
}

TEST(EventStream, UnlabeledLabelAccessThrows) {
    EXPECT_THROW(tiny().label(0), MissingLabelError);
    EXPECT_EQ(tiny().with_uniform_label(Label::Noise).label(3), Label::Noise);
}

TEST(EventStream, EmptyLabeledStreamStaysLabeled) {
    EventStream s({4, 4}, {}, 0, 0, {});
    EXPECT_TRUE(s.labeled());
    EXPECT_FALSE(s.without_labels().labeled());
}

TEST(Slice, ClosedIntervalIncludesBothEnds) {
    auto s = slice(tiny(), 20, 30);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.t_start(), 20u);
    EXPECT_EQ(s.t_end(), 30u);
}

TEST(Slice, EmptyIntervalInsideWindow) {
    auto s = slice(tiny(), 11, 19);
    EXPECT_TRUE(s.empty());
}

TEST(Slice, OutsideWindowThrows) {
    EXPECT_THROW(slice(tiny(), 0, 41), RangeError);
    EXPECT_THROW(slice(tiny(), 30, 20), RangeError);
}

TEST(Slice, Idempotent) {
    auto s = random_stream({32, 32}, 2000, 0, 100000, 3, true);
    auto once = slice(s, 12345, 67890);
    EXPECT_EQ(slice(once, 12345, 67890), once);
}

TEST(Window, HalfOpenPartitionCoversEveryEventOnce) {
    auto s = random_stream({32, 32}, 5000, 0, 99999, 4);
    std::size_t total = 0;
    for (Timestamp t = 0; t < 100000; t += 7000) {
        total += window(s, t, std::min<Timestamp>(t + 7000, 99999)).size();
    }
    // the last event time equals t_end only if drawn there; closed slice covers it
    total += slice(s, 99999, 99999).size();
    EXPECT_EQ(total, s.size());
}

TEST(Merge, MatchesSortOracleAndIsStable) {
    auto a = random_stream({16, 16}, 700, 0, 5000, 5, true);
    auto b = random_stream({16, 16}, 900, 100, 6000, 6, true);
    auto m = merge(a, b);
    ASSERT_EQ(m.size(), a.size() + b.size());
    EXPECT_TRUE(validate(m).empty());

    std::vector<std::pair<LabeledEvent, int>> all;
    for (std::size_t i = 0; i < a.size(); ++i) all.push_back({a.labeled_event(i), 0});
    for (std::size_t i = 0; i < b.size(); ++i) all.push_back({b.labeled_event(i), 1});
    std::stable_sort(all.begin(), all.end(),
                     [](auto& l, auto& r) { return l.first.event.t < r.first.event.t; });
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m.labeled_event(i), all[i].first);
    EXPECT_EQ(m.t_start(), 0u);
    EXPECT_EQ(m.t_end(), 6000u);
}

TEST(Merge, LabeledOnlyWhenBothAre) {
    auto a = random_stream({16, 16}, 10, 0, 100, 1, true);
    auto b = random_stream({16, 16}, 10, 0, 100, 2, false);
    EXPECT_FALSE(merge(a, b).labeled());
    EXPECT_TRUE(merge(a, a).labeled());
}

TEST(Merge, GeometryMismatchThrows) {
    auto a = random_stream({16, 16}, 10, 0, 100, 1);
    auto b = random_stream({16, 17}, 10, 0, 100, 2);
    EXPECT_THROW(merge(a, b), IncompatibleError);
}

TEST(Select, KeepsMaskedEventsInOrder) {
    auto s = tiny().with_uniform_label(Label::Signal);
    auto k = select(s, {true, false, false, true});
    ASSERT_EQ(k.size(), 2u);
    EXPECT_EQ(k[1].t, 30u);
    EXPECT_TRUE(k.labeled());
    EXPECT_THROW(select(s, {true}), std::invalid_argument);
}

TEST(EventStream, InferredBounds) {
    auto s = EventStream::with_inferred_bounds({4, 4}, {{7, 0, 0, 1}, {9, 0, 0, 1}});
    EXPECT_EQ(s.t_start(), 7u);
    EXPECT_EQ(s.t_end(), 10u);
    auto e = EventStream::with_inferred_bounds({4, 4}, {});
    EXPECT_EQ(e.duration(), 0u);
}
