#include "aocc/esr_metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aocc/frame_contrast.hpp"

namespace aocc {

namespace {

EventCountImage tally(const EventStream& stream, std::size_t begin, std::size_t end) {
    EventCountImage img{stream.geometry(), std::vector<std::uint64_t>(stream.geometry().pixel_count()),
                        0};
    for (std::size_t i = begin; i < end; ++i) {
        ++img.counts[std::size_t(stream[i].y) * stream.geometry().width + stream[i].x];
    }
    img.total = end - begin;
    return img;
}

}  // namespace

EventCountImage count_image(const EventStream& stream) { return tally(stream, 0, stream.size()); }

EventCountImage count_image(const EventStream& stream, Timestamp t0, Timestamp t1) {
    if (t0 > t1 || t0 < stream.t_start() || t1 > stream.t_end()) {
        throw RangeError("count window [" + std::to_string(t0) + ", " + std::to_string(t1) +
                         ") outside recording window");
    }
    return tally(stream, stream.lower_index(t0), stream.lower_index(t1));
}

EsrResult esr(const EventCountImage& image, std::optional<double> m) {
    const std::uint64_t n_total = image.total;
    if (n_total < 2) throw DegenerateInputError("ESR needs at least two events");
    const double big_n = double(n_total);
    const double ref = m.value_or(big_n);
    if (!(ref > 0.0) || ref > big_n) {
        throw std::invalid_argument("ESR reference count M must lie in (0, N]");
    }

    // Exact while N < 2^32, since the sum never exceeds N(N-1).
    std::uint64_t pairs = 0;
    double survivors = 0.0;
    const double base = 1.0 - ref / big_n;
    for (std::uint64_t n : image.counts) {
        pairs += n * (n - (n > 0));
        survivors += std::pow(base, double(n));
    }
    EsrResult r;
    r.m = ref;
    r.ntss = double(pairs) / (big_n * (big_n - 1.0));
    r.ln = double(image.pixel_count()) - survivors;
    r.esr = std::sqrt(r.ntss * r.ln);
    return r;
}

EsrResult esr_windowed(const EventStream& stream, Timestamp window_us, std::optional<double> m) {
    if (window_us == 0 || window_us > stream.duration()) {
        throw std::invalid_argument("ESR window outside (0, duration]");
    }
    const Timestamp windows = stream.duration() / window_us;
    EsrResult mean;
    std::size_t used = 0;
    for (Timestamp j = 0; j < windows; ++j) {
        const Timestamp t0 = stream.t_start() + j * window_us;
        EventCountImage img = count_image(stream, t0, t0 + window_us);
        if (img.total < 2) continue;
        EsrResult r = esr(img, m);
        mean.ntss += r.ntss;
        mean.ln += r.ln;
        mean.esr += r.esr;
        mean.m += r.m;
        ++used;
    }
    if (used == 0) throw DegenerateInputError("no ESR window holds two or more events");
    mean.ntss /= double(used);
    mean.ln /= double(used);
    mean.esr /= double(used);
    mean.m /= double(used);
    return mean;
}

}  // namespace aocc
