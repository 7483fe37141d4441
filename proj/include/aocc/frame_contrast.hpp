#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "aocc/event_core.hpp"

namespace aocc {

inline constexpr std::uint8_t kPixelOn = 255;

/// Largest Sobel magnitude a {0, 255} frame can produce is below 4*255*sqrt(2),
/// so no frame contrast exceeds it.
inline const double kContrastUpperBound = 4.0 * 255.0 * std::sqrt(2.0);

class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binary occupancy image of one half-open time window, row-major.
struct EventFrame {
    SensorGeometry geometry;
    std::vector<std::uint8_t> occupancy;  // 0 or 255
    Timestamp t0 = 0;
    Timestamp t1 = 0;

    EventFrame() = default;
    EventFrame(SensorGeometry g, Timestamp t0_, Timestamp t1_)
        : geometry(g), occupancy(g.pixel_count(), 0), t0(t0_), t1(t1_) {}

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        return occupancy[std::size_t(y) * geometry.width + x];
    }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) {
        return occupancy[std::size_t(y) * geometry.width + x];
    }
    std::size_t on_pixel_count() const;
};

struct GradientField {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<double> magnitude;  // row-major

    double at(std::uint32_t x, std::uint32_t y) const {
        return magnitude[std::size_t(y) * width + x];
    }
};

/// Pixel is 255 iff at least one event of either polarity has t0 <= t < t1.
/// Throws RangeError unless t_start <= t0 <= t1 <= t_end.
EventFrame accumulate_frame(const EventStream& stream, Timestamp t0, Timestamp t1);

/// 3x3 Sobel magnitude with replicate border padding.
GradientField sobel_gradient(const EventFrame& frame);

/// Sample standard deviation (divisor N - 1) of the Sobel magnitudes.
/// Throws DegenerateInputError for frames with fewer than two pixels.
double contrast(const EventFrame& frame);

/// Sample standard deviation of a magnitude field, two-pass.
double contrast(const GradientField& field);

/// Writes the frame as binary PGM (P5, maxval 255).
void write_pgm(const EventFrame& frame, std::ostream& out);

namespace detail {

/// Reusable scratch state for computing many frame contrasts of one geometry.
/// Pixels are addressed by row-major index; any nonzero value counts as on.
class ContrastKernel {
public:
    explicit ContrastKernel(SensorGeometry geometry);

    /// Contrast of `occupancy`, given the indices of its on pixels (duplicates allowed).
    double evaluate(std::span<const std::uint8_t> occupancy, std::span<const std::uint32_t> on);

private:
    double dense(std::span<const std::uint8_t> occupancy);
    double sparse(std::span<const std::uint8_t> occupancy, std::span<const std::uint32_t> on);
    double finish(std::size_t zero_extra);

    SensorGeometry geometry_;
    std::vector<double> bin_value_;        // 255 * sqrt(k), k = Gx^2 + Gy^2 over 255^2
    std::vector<std::uint64_t> hist_;      // counts per k in [0, 32]
    std::vector<std::uint8_t> visited_;
    std::vector<std::uint32_t> touched_;
    std::vector<std::int32_t> vsum_, vdiff_;
};

}  // namespace detail

}  // namespace aocc
