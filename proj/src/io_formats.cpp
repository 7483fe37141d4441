#include "aocc/io_formats.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace aocc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(s.substr(start)));
            return out;
        }
        out.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

template <typename T>
T parse_int(std::string_view field, std::size_t line, const char* name) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError(line, std::string("bad ") + name + " '" + std::string(field) + "'");
    }
    return value;
}

double parse_double(std::string_view field, std::size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError(line, "bad score '" + std::string(field) + "'");
    }
    return value;
}

struct CommentKeys {
    std::optional<std::uint32_t> width, height;
    std::optional<Timestamp> t_start, t_end;
};

void parse_comment(std::string_view line, std::size_t lineno, CommentKeys& keys) {
    for (auto token : split(line.substr(1), ' ')) {
        auto eq = token.find('=');
        if (eq == std::string_view::npos) continue;
        auto key = token.substr(0, eq);
        auto val = token.substr(eq + 1);
        if (key == "width") keys.width = parse_int<std::uint32_t>(val, lineno, "width");
        else if (key == "height") keys.height = parse_int<std::uint32_t>(val, lineno, "height");
        else if (key == "t_start") keys.t_start = parse_int<Timestamp>(val, lineno, "t_start");
        else if (key == "t_end") keys.t_end = parse_int<Timestamp>(val, lineno, "t_end");
    }
}

void put_u16(std::string& buf, std::uint16_t v) {
    buf.push_back(char(v & 0xFF));
    buf.push_back(char(v >> 8));
}

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(char((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(char((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_le(const unsigned char* p, int n) {
    std::uint64_t v = 0;
    for (int i = n - 1; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

}  // namespace

EventStream read_csv(std::istream& in, std::optional<SensorGeometry> geometry) {
    CommentKeys keys;
    std::vector<Event> events;
    std::vector<Label> labels;
    bool have_header = false;
    bool labeled = false;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            parse_comment(view, lineno, keys);
            continue;
        }
        auto fields = split(view, ',');
        if (!have_header) {
            if (fields.size() == 4 && fields[0] == "t_us" && fields[1] == "x" &&
                fields[2] == "y" && fields[3] == "p") {
                labeled = false;
            } else if (fields.size() == 5 && fields[0] == "t_us" && fields[1] == "x" &&
                       fields[2] == "y" && fields[3] == "p" && fields[4] == "label") {
                labeled = true;
            } else {
                throw ParseError(lineno, "expected header 't_us,x,y,p[,label]'");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != (labeled ? 5u : 4u)) {
            throw ParseError(lineno, "expected " + std::to_string(labeled ? 5 : 4) +
                                         " fields, got " + std::to_string(fields.size()));
        }
        Event e;
        e.t = parse_int<Timestamp>(fields[0], lineno, "timestamp");
        e.x = parse_int<std::uint16_t>(fields[1], lineno, "x");
        e.y = parse_int<std::uint16_t>(fields[2], lineno, "y");
        int p = parse_int<int>(fields[3], lineno, "polarity");
        if (p != 1 && p != -1) {
            throw ValueError("line " + std::to_string(lineno) + ": polarity " +
                             std::to_string(p) + " not in {-1, 1}");
        }
        e.p = std::int8_t(p);
        events.push_back(e);
        if (labeled) {
            int l = parse_int<int>(fields[4], lineno, "label");
            if (l != 0 && l != 1) {
                throw ValueError("line " + std::to_string(lineno) + ": label " +
                                 std::to_string(l) + " not in {0, 1}");
            }
            labels.push_back(l == 1 ? Label::Signal : Label::Noise);
        }
    }
    if (!have_header) {
        throw ParseError(lineno, "missing header line");
    }

    SensorGeometry geom;
    if (keys.width && keys.height) {
        geom = {*keys.width, *keys.height};
    } else if (geometry) {
        geom = *geometry;
    } else {
        throw ParseError(0, "sensor geometry not given (no '# width=W height=H' line)");
    }

    Timestamp t0 = events.empty() ? 0 : events.front().t;
    Timestamp t1 = events.empty() ? 0 : events.back().t + 1;
    if (keys.t_start) t0 = *keys.t_start;
    if (keys.t_end) t1 = *keys.t_end;

    EventStream stream = labeled ? EventStream(geom, std::move(events), t0, t1, std::move(labels))
                                 : EventStream(geom, std::move(events), t0, t1);
    auto report = validate(stream);
    if (!report.empty()) {
        throw ValueError("invalid event stream (" + to_string(report.front().kind) +
                         "): " + report.front().message);
    }
    return stream;
}

void write_csv(const EventStream& stream, std::ostream& out) {
    std::string buf;
    buf.reserve(64 + stream.size() * 24);
    buf += "# aocc-events v1 width=" + std::to_string(stream.geometry().width) +
           " height=" + std::to_string(stream.geometry().height) +
           " t_start=" + std::to_string(stream.t_start()) +
           " t_end=" + std::to_string(stream.t_end()) + "\n";
    buf += stream.labeled() ? "t_us,x,y,p,label\n" : "t_us,x,y,p\n";
    std::array<char, 32> num{};
    auto append = [&](auto v) {
        auto res = std::to_chars(num.data(), num.data() + num.size(), v);
        buf.append(num.data(), res.ptr);
    };
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const Event& e = stream[i];
        append(e.t);
        buf.push_back(',');
        append(e.x);
        buf.push_back(',');
        append(e.y);
        buf.push_back(',');
        append(int(e.p));
        if (stream.labeled()) {
            buf += stream.labels()[i] == Label::Signal ? ",1" : ",0";
        }
        buf.push_back('\n');
    }
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw IoError("failed writing CSV output");
}

StreamHeader read_binary_header(std::istream& in) {
    std::array<unsigned char, kBinaryHeaderSize> h{};
    in.read(reinterpret_cast<char*>(h.data()), h.size());
    if (in.gcount() != std::streamsize(h.size())) {
        throw LengthError("binary stream shorter than its 16-byte header");
    }
    if (std::memcmp(h.data(), kBinaryMagic, 4) != 0) {
        throw FormatError("bad magic, expected 'AOCC'");
    }
    auto version = std::uint16_t(get_le(h.data() + 4, 2));
    if (version != kBinaryVersion) {
        throw FormatError("unsupported binary version " + std::to_string(version));
    }
    StreamHeader header;
    header.width = std::uint16_t(get_le(h.data() + 6, 2));
    header.height = std::uint16_t(get_le(h.data() + 8, 2));
    header.event_count = std::uint32_t(get_le(h.data() + 10, 4));
    if (h[14] > 1) throw FormatError("labeled flag must be 0 or 1");
    header.labeled = h[14] == 1;
    if (h[15] != 0) throw FormatError("nonzero header padding");
    return header;
}

EventStream read_binary(std::istream& in) {
    StreamHeader header = read_binary_header(in);
    std::vector<unsigned char> body(std::size_t(header.event_count) * kBinaryRecordSize);
    in.read(reinterpret_cast<char*>(body.data()), std::streamsize(body.size()));
    if (in.gcount() != std::streamsize(body.size())) {
        throw LengthError("binary stream truncated: header announces " +
                          std::to_string(header.event_count) + " records");
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw FormatError("trailing bytes after last record");
    }

    std::vector<Event> events(header.event_count);
    std::vector<Label> labels;
    if (header.labeled) labels.resize(header.event_count);
    for (std::size_t i = 0; i < header.event_count; ++i) {
        const unsigned char* r = body.data() + i * kBinaryRecordSize;
        Event& e = events[i];
        e.t = get_le(r, 8);
        e.x = std::uint16_t(get_le(r + 8, 2));
        e.y = std::uint16_t(get_le(r + 10, 2));
        e.p = std::int8_t(r[12]);
        auto label = std::int8_t(r[13]);
        if (e.p != 1 && e.p != -1) {
            throw ValueError("record " + std::to_string(i) + ": polarity " +
                             std::to_string(int(e.p)) + " not in {-1, 1}");
        }
        if (r[14] != 0 || r[15] != 0) {
            throw FormatError("record " + std::to_string(i) + ": nonzero padding");
        }
        if (header.labeled) {
            if (label != 0 && label != 1) {
                throw FormatError("record " + std::to_string(i) + ": label " +
                                  std::to_string(int(label)) + " in a labeled stream");
            }
            labels[i] = label == 1 ? Label::Signal : Label::Noise;
        } else if (label != -1) {
            throw FormatError("record " + std::to_string(i) + ": label in an unlabeled stream");
        }
    }

    SensorGeometry geom{header.width, header.height};
    std::optional<std::vector<Label>> lb;
    if (header.labeled) lb = std::move(labels);
    EventStream stream = EventStream::with_inferred_bounds(geom, std::move(events), std::move(lb));
    auto report = validate(stream);
    if (!report.empty()) {
        throw ValueError("invalid event stream (" + to_string(report.front().kind) +
                         "): " + report.front().message);
    }
    return stream;
}

void write_binary(const EventStream& stream, std::ostream& out) {
    const auto& g = stream.geometry();
    if (g.width > 0xFFFF || g.height > 0xFFFF) {
        throw ValueError("geometry does not fit the 16-bit binary header");
    }
    if (stream.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw ValueError("too many events for the binary format");
    }
    std::string buf;
    buf.reserve(kBinaryHeaderSize + stream.size() * kBinaryRecordSize);
    buf.append(kBinaryMagic, 4);
    put_u16(buf, kBinaryVersion);
    put_u16(buf, std::uint16_t(g.width));
    put_u16(buf, std::uint16_t(g.height));
    put_u32(buf, std::uint32_t(stream.size()));
    buf.push_back(stream.labeled() ? 1 : 0);
    buf.push_back(0);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const Event& e = stream[i];
        put_u64(buf, e.t);
        put_u16(buf, e.x);
        put_u16(buf, e.y);
        buf.push_back(char(e.p));
        std::int8_t label = -1;
        if (stream.labeled()) label = stream.labels()[i] == Label::Signal ? 1 : 0;
        buf.push_back(char(label));
        buf.push_back(0);
        buf.push_back(0);
    }
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw IoError("failed writing binary output");
}

namespace {

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

bool is_binary_path(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
}

}  // namespace

EventStream read_csv_file(const std::string& path, std::optional<SensorGeometry> geometry) {
    auto in = open_in(path);
    return read_csv(in, geometry);
}

void write_csv_file(const EventStream& stream, const std::string& path) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_csv(stream, out);
}

EventStream read_binary_file(const std::string& path) {
    auto in = open_in(path, std::ios::in | std::ios::binary);
    return read_binary(in);
}

void write_binary_file(const EventStream& stream, const std::string& path) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_binary(stream, out);
}

EventStream read_stream_file(const std::string& path, std::optional<SensorGeometry> geometry) {
    return is_binary_path(path) ? read_binary_file(path) : read_csv_file(path, geometry);
}

void write_stream_file(const EventStream& stream, const std::string& path) {
    if (is_binary_path(path)) {
        write_binary_file(stream, path);
    } else {
        write_csv_file(stream, path);
    }
}

std::vector<double> read_scores_csv(std::istream& in) {
    std::vector<double> scores;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        if (!have_header) {
            if (view != "score") throw ParseError(lineno, "expected header 'score'");
            have_header = true;
            continue;
        }
        double s = parse_double(view, lineno);
        if (!(s >= 0.0 && s <= 1.0)) {
            throw ValueError("line " + std::to_string(lineno) + ": score outside [0, 1]");
        }
        scores.push_back(s);
    }
    if (!have_header) throw ParseError(lineno, "missing header line");
    return scores;
}

void write_scores_csv(const std::vector<double>& scores, std::ostream& out) {
    std::string buf = "# aocc-scores v1\nscore\n";
    for (double s : scores) {
        buf += format_double(s);
        buf.push_back('\n');
    }
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw IoError("failed writing scores");
}

std::vector<double> read_scores_file(const std::string& path) {
    auto in = open_in(path);
    return read_scores_csv(in);
}

void write_scores_file(const std::vector<double>& scores, const std::string& path) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_scores_csv(scores, out);
}

}  // namespace aocc
