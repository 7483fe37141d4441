#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"

using namespace aocc;
using aocc::testing::random_stream;

namespace {

std::string to_csv(const EventStream& s) {
    std::ostringstream out;
    write_csv(s, out);
    return out.str();
}

EventStream from_csv(const std::string& text, std::optional<SensorGeometry> g = {}) {
    std::istringstream in(text);
    return read_csv(in, g);
}

std::string to_bin(const EventStream& s) {
    std::ostringstream out(std::ios::binary);
    write_binary(s, out);
    return out.str();
}

EventStream from_bin(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return read_binary(in);
}

}  // namespace

TEST(Csv, RoundTripPreservesEverything) {
    for (bool labeled : {false, true}) {
        auto s = random_stream({346, 260}, 3000, 500, 90000, 11, labeled);
        EXPECT_EQ(from_csv(to_csv(s)), s);
    }
}

TEST(Csv, ParsesPlainFileWithGeometryHint) {
    auto s = from_csv("t_us,x,y,p\n5,1,2,1\n9,3,3,-1\n", SensorGeometry{4, 4});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_FALSE(s.labeled());
    EXPECT_EQ(s.t_start(), 5u);
    EXPECT_EQ(s.t_end(), 10u);
    EXPECT_EQ(s[1].p, -1);
}

TEST(Csv, GeometryCommentWins) {
    auto s = from_csv("# width=10 height=5 t_start=0 t_end=100\nt_us,x,y,p,label\n5,9,4,1,0\n");
    EXPECT_EQ(s.geometry(), (SensorGeometry{10, 5}));
    EXPECT_EQ(s.t_end(), 100u);
    EXPECT_EQ(s.label(0), Label::Noise);
}

TEST(Csv, MissingGeometryIsParseError) {
    EXPECT_THROW(from_csv("t_us,x,y,p\n1,1,1,1\n"), ParseError);
}

TEST(Csv, ErrorsCarryLineNumbers) {
    const std::string head = "# width=4 height=4\nt_us,x,y,p\n";
    try {
        from_csv(head + "1,1,1,1\n2,1,x,1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_THROW(from_csv(head + "1,1,1,0\n"), ValueError);
    EXPECT_THROW(from_csv(head + "2,1,1,1\n1,1,1,1\n"), ValueError);
    EXPECT_THROW(from_csv(head + "1,4,1,1\n"), ValueError);
    EXPECT_THROW(from_csv("# width=4 height=4\nt,x,y,p\n"), ParseError);
    EXPECT_THROW(from_csv("# width=4 height=4\nt_us,x,y,p,label\n1,1,1,1,2\n"), ValueError);
}

TEST(Binary, SingleEventByteLayout) {
    EventStream s({346, 260}, {{1, 2, 3, 1}}, 0, 2);
    const std::string b = to_bin(s);
    const unsigned char expect[] = {'A', 'O', 'C', 'C', 1, 0, 0x5A, 0x01, 0x04, 0x01, 1, 0, 0, 0,
                                    0, 0,  // header
                                    1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 3, 0, 1, 0xFF, 0, 0};
    ASSERT_EQ(b.size(), sizeof expect);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ((unsigned char)b[i], expect[i]) << i;
}

TEST(Binary, EmptyLabeledStreamIsHeaderOnly) {
    EventStream s({4, 4}, {}, 0, 0, {});
    auto b = to_bin(s);
    EXPECT_EQ(b.size(), kBinaryHeaderSize);
    EXPECT_TRUE(from_bin(b).labeled());
}

TEST(Binary, RoundTripPreservesEventsLabelsGeometry) {
    for (bool labeled : {false, true}) {
        auto s = random_stream({346, 260}, 5000, 0, 1000000, 12, labeled);
        auto b = to_bin(s);
        EXPECT_EQ(b.size(), kBinaryHeaderSize + kBinaryRecordSize * s.size());
        auto r = from_bin(b);
        // the format stores no recording window; bounds come back inferred
        EXPECT_EQ(r, EventStream::with_inferred_bounds(
                         s.geometry(), {s.events().begin(), s.events().end()},
                         labeled ? std::optional<std::vector<Label>>(
                                       std::vector<Label>(s.labels().begin(), s.labels().end()))
                                 : std::nullopt));
    }
}

TEST(Binary, RejectsCorruptInput) {
    auto s = random_stream({16, 16}, 3, 0, 100, 1, true);
    auto b = to_bin(s);
    auto bad_magic = b;
    bad_magic[0] = 'X';
    EXPECT_THROW(from_bin(bad_magic), FormatError);
    auto bad_version = b;
    bad_version[4] = 2;
    EXPECT_THROW(from_bin(bad_version), FormatError);
    EXPECT_THROW(from_bin(b.substr(0, b.size() - 1)), LengthError);
    EXPECT_THROW(from_bin(b + std::string(1, '\0')), FormatError);
    auto bad_pol = b;
    bad_pol[kBinaryHeaderSize + 12] = 0;
    EXPECT_THROW(from_bin(bad_pol), ValueError);
    auto bad_label = b;
    bad_label[kBinaryHeaderSize + 13] = -1;  // unlabeled marker in a labeled file
    EXPECT_THROW(from_bin(bad_label), FormatError);
}

TEST(Files, ExtensionSelectsFormat) {
    auto dir = std::filesystem::temp_directory_path() / "aocc_io_test";
    std::filesystem::create_directories(dir);
    auto s = random_stream({20, 10}, 100, 0, 1000, 7, true);
    write_stream_file(s, (dir / "a.bin").string());
    write_stream_file(s, (dir / "a.csv").string());
    EXPECT_EQ(std::filesystem::file_size(dir / "a.bin"), 16u + 16u * 100u);
    EXPECT_EQ(read_stream_file((dir / "a.csv").string()), s);
    EXPECT_EQ(read_stream_file((dir / "a.bin").string()).events().size(), 100u);
    EXPECT_THROW(read_stream_file((dir / "missing.csv").string()), IoError);
    std::filesystem::remove_all(dir);
}

TEST(Scores, RoundTripAndRange) {
    std::vector<double> v{0.0, 0.125, 1.0, 0.3333333333333333};
    std::ostringstream out;
    write_scores_csv(v, out);
    std::istringstream in(out.str());
    EXPECT_EQ(read_scores_csv(in), v);
    std::istringstream bad("score\n1.5\n");
    EXPECT_THROW(read_scores_csv(bad), ValueError);
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
}
