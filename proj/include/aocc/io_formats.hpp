#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aocc/event_core.hpp"

namespace aocc {

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Field value outside its allowed set (e.g. polarity 0).
class ValueError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad magic or version in a binary file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary file shorter than its header claims.
class LengthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StreamHeader {
    std::uint16_t width = 0;
    std::uint16_t height = 0;
    bool labeled = false;
    std::uint32_t event_count = 0;
};

inline constexpr char kBinaryMagic[4] = {'A', 'O', 'C', 'C'};
inline constexpr std::uint16_t kBinaryVersion = 1;
inline constexpr std::size_t kBinaryHeaderSize = 16;
inline constexpr std::size_t kBinaryRecordSize = 16;

/// Reads `t_us,x,y,p[,label]` text. Geometry comes from a
/// `# ... width=W height=H` comment line, else from `geometry`; the recording
/// window from `t_start=` / `t_end=` keys, else it is inferred from the events.
EventStream read_csv(std::istream& in, std::optional<SensorGeometry> geometry = {});
void write_csv(const EventStream& stream, std::ostream& out);

/// 16-byte header followed by 16-byte little-endian records. The format does
/// not store the recording window; readers infer it from the events.
EventStream read_binary(std::istream& in);
void write_binary(const EventStream& stream, std::ostream& out);
StreamHeader read_binary_header(std::istream& in);

EventStream read_csv_file(const std::string& path, std::optional<SensorGeometry> geometry = {});
void write_csv_file(const EventStream& stream, const std::string& path);
EventStream read_binary_file(const std::string& path);
void write_binary_file(const EventStream& stream, const std::string& path);

/// Chooses the codec from the extension: `.bin` is binary, anything else CSV.
EventStream read_stream_file(const std::string& path, std::optional<SensorGeometry> geometry = {});
void write_stream_file(const EventStream& stream, const std::string& path);

/// One `score` column, one row per event, in event order.
std::vector<double> read_scores_csv(std::istream& in);
void write_scores_csv(const std::vector<double>& scores, std::ostream& out);
std::vector<double> read_scores_file(const std::string& path);
void write_scores_file(const std::vector<double>& scores, const std::string& path);

/// Shortest text that parses back to exactly `value`; `nan`, `inf`, `-inf` for
/// non-finite values.
std::string format_double(double value);

}  // namespace aocc
