#include "aocc/frame_contrast.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace aocc {

namespace {

constexpr int kMaxSquaredMagnitude = 32;  // (Gx/255)^2 + (Gy/255)^2 on a binary frame

}  // namespace

std::size_t EventFrame::on_pixel_count() const {
    return std::size_t(std::count_if(occupancy.begin(), occupancy.end(),
                                     [](std::uint8_t v) { return v != 0; }));
}

EventFrame accumulate_frame(const EventStream& stream, Timestamp t0, Timestamp t1) {
    if (t0 > t1 || t0 < stream.t_start() || t1 > stream.t_end()) {
        throw RangeError("frame window [" + std::to_string(t0) + ", " + std::to_string(t1) +
                         ") outside recording window");
    }
    EventFrame frame(stream.geometry(), t0, t1);
    const std::size_t end = stream.lower_index(t1);
    for (std::size_t i = stream.lower_index(t0); i < end; ++i) {
        frame.at(stream[i].x, stream[i].y) = kPixelOn;
    }
    return frame;
}

GradientField sobel_gradient(const EventFrame& frame) {
    const auto w = frame.geometry.width;
    const auto h = frame.geometry.height;
    GradientField field{w, h, std::vector<double>(frame.geometry.pixel_count())};
    auto px = [&](std::int64_t x, std::int64_t y) {
        x = std::clamp<std::int64_t>(x, 0, w - 1);
        y = std::clamp<std::int64_t>(y, 0, h - 1);
        return double(frame.occupancy[std::size_t(y) * w + std::size_t(x)]);
    };
    for (std::int64_t y = 0; y < h; ++y) {
        for (std::int64_t x = 0; x < w; ++x) {
            double gx = (px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2 * px(x - 1, y) + px(x - 1, y + 1));
            double gy = (px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2 * px(x, y - 1) + px(x + 1, y - 1));
            field.magnitude[std::size_t(y) * w + std::size_t(x)] = std::sqrt(gx * gx + gy * gy);
        }
    }
    return field;
}

double contrast(const GradientField& field) {
    const std::size_t n = field.magnitude.size();
    if (n < 2) throw DegenerateInputError("contrast needs at least two pixels");
    double sum = 0;
    for (double g : field.magnitude) sum += g;
    const double mean = sum / double(n);
    double ss = 0;
    for (double g : field.magnitude) ss += (g - mean) * (g - mean);
    return std::sqrt(ss / double(n - 1));
}

double contrast(const EventFrame& frame) {
    if (frame.geometry.pixel_count() < 2) {
        throw DegenerateInputError("contrast needs at least two pixels");
    }
    std::vector<std::uint32_t> on;
    for (std::size_t i = 0; i < frame.occupancy.size(); ++i) {
        if (frame.occupancy[i]) on.push_back(std::uint32_t(i));
    }
    detail::ContrastKernel kernel(frame.geometry);
    return kernel.evaluate(frame.occupancy, on);
}

void write_pgm(const EventFrame& frame, std::ostream& out) {
    out << "P5\n" << frame.geometry.width << " " << frame.geometry.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.occupancy.data()),
              std::streamsize(frame.occupancy.size()));
}

namespace detail {

ContrastKernel::ContrastKernel(SensorGeometry geometry)
    : geometry_(geometry),
      bin_value_(kMaxSquaredMagnitude + 1),
      hist_(kMaxSquaredMagnitude + 1, 0),
      visited_(geometry.pixel_count(), 0),
      vsum_(geometry.width),
      vdiff_(geometry.width) {
    if (geometry.pixel_count() < 2) {
        throw DegenerateInputError("contrast needs at least two pixels");
    }
    for (int k = 0; k <= kMaxSquaredMagnitude; ++k) {
        bin_value_[std::size_t(k)] = double(kPixelOn) * std::sqrt(double(k));
    }
}

double ContrastKernel::evaluate(std::span<const std::uint8_t> occupancy,
                                std::span<const std::uint32_t> on) {
    if (on.empty()) return 0.0;
    if (on.size() * 9 < geometry_.pixel_count() / 2) return sparse(occupancy, on);
    return dense(occupancy);
}

double ContrastKernel::dense(std::span<const std::uint8_t> occupancy) {
    const std::int32_t w = std::int32_t(geometry_.width);
    const std::int32_t h = std::int32_t(geometry_.height);
    auto bit = [&](std::int32_t x, std::int32_t y) -> std::int32_t {
        return occupancy[std::size_t(y) * std::size_t(w) + std::size_t(x)] != 0;
    };
    for (std::int32_t y = 0; y < h; ++y) {
        const std::int32_t ym = std::max(y - 1, 0);
        const std::int32_t yp = std::min(y + 1, h - 1);
        for (std::int32_t x = 0; x < w; ++x) {
            vsum_[std::size_t(x)] = bit(x, ym) + 2 * bit(x, y) + bit(x, yp);
            vdiff_[std::size_t(x)] = bit(x, yp) - bit(x, ym);
        }
        for (std::int32_t x = 0; x < w; ++x) {
            const auto xm = std::size_t(std::max(x - 1, 0));
            const auto xp = std::size_t(std::min(x + 1, w - 1));
            const std::int32_t gx = vsum_[xp] - vsum_[xm];
            const std::int32_t gy = vdiff_[xm] + 2 * vdiff_[std::size_t(x)] + vdiff_[xp];
            ++hist_[std::size_t(gx * gx + gy * gy)];
        }
    }
    return finish(0);
}

double ContrastKernel::sparse(std::span<const std::uint8_t> occupancy,
                              std::span<const std::uint32_t> on) {
    const std::int32_t w = std::int32_t(geometry_.width);
    const std::int32_t h = std::int32_t(geometry_.height);
    auto bit = [&](std::int32_t x, std::int32_t y) -> std::int32_t {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return occupancy[std::size_t(y) * std::size_t(w) + std::size_t(x)] != 0;
    };
    touched_.clear();
    // Pixels outside every on-pixel's 3x3 neighbourhood have zero gradient.
    for (std::uint32_t idx : on) {
        const std::int32_t cx = std::int32_t(idx % std::uint32_t(w));
        const std::int32_t cy = std::int32_t(idx / std::uint32_t(w));
        for (std::int32_t y = std::max(cy - 1, 0); y <= std::min(cy + 1, h - 1); ++y) {
            for (std::int32_t x = std::max(cx - 1, 0); x <= std::min(cx + 1, w - 1); ++x) {
                const std::size_t p = std::size_t(y) * std::size_t(w) + std::size_t(x);
                if (visited_[p]) continue;
                visited_[p] = 1;
                touched_.push_back(std::uint32_t(p));
                const std::int32_t gx = (bit(x + 1, y - 1) + 2 * bit(x + 1, y) + bit(x + 1, y + 1)) -
                                        (bit(x - 1, y - 1) + 2 * bit(x - 1, y) + bit(x - 1, y + 1));
                const std::int32_t gy = (bit(x - 1, y + 1) + 2 * bit(x, y + 1) + bit(x + 1, y + 1)) -
                                        (bit(x - 1, y - 1) + 2 * bit(x, y - 1) + bit(x + 1, y - 1));
                ++hist_[std::size_t(gx * gx + gy * gy)];
            }
        }
    }
    for (std::uint32_t p : touched_) visited_[p] = 0;
    return finish(geometry_.pixel_count() - touched_.size());
}

double ContrastKernel::finish(std::size_t zero_extra) {
    hist_[0] += zero_extra;
    const double n = double(geometry_.pixel_count());
    double sum = 0;
    for (std::size_t k = 0; k < hist_.size(); ++k) sum += double(hist_[k]) * bin_value_[k];
    const double mean = sum / n;
    double ss = 0;
    for (std::size_t k = 0; k < hist_.size(); ++k) {
        const double d = bin_value_[k] - mean;
        ss += double(hist_[k]) * d * d;
    }
    std::fill(hist_.begin(), hist_.end(), 0);
    return std::sqrt(ss / (n - 1.0));
}

}  // namespace detail

}  // namespace aocc
