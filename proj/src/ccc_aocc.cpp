#include "aocc/ccc_aocc.hpp"

#include <stdexcept>
#include <string>

#include "aocc/frame_contrast.hpp"
#include "aocc/parallel.hpp"

namespace aocc {

IntervalGrid::IntervalGrid(std::vector<Timestamp> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i] == 0) {
            throw std::invalid_argument("grid intervals must be positive");
        }
        if (i > 0 && intervals_[i] <= intervals_[i - 1]) {
            throw std::invalid_argument("grid intervals must strictly increase");
        }
    }
}

IntervalGrid IntervalGrid::uniform(Timestamp first, Timestamp last, Timestamp step) {
    if (step == 0) throw std::invalid_argument("grid step must be positive");
    std::vector<Timestamp> v;
    for (Timestamp dt = first; dt <= last; dt += step) v.push_back(dt);
    return IntervalGrid(std::move(v));
}

IntervalGrid IntervalGrid::standard() { return uniform(2000, 400000, 2000); }

IntervalGrid IntervalGrid::coarse() {
    std::vector<Timestamp> v;
    for (Timestamp ms = 1; ms <= 60; ++ms) v.push_back(ms * 1000);
    for (Timestamp ms = 65; ms <= 85; ms += 5) v.push_back(ms * 1000);
    return IntervalGrid(std::move(v));
}

std::size_t ContrastCurve::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].c_avg > points[best].c_avg) best = i;
    }
    return best;
}

double ContrastCurve::max() const { return points.empty() ? 0.0 : points[argmax()].c_avg; }

namespace {

void check_interval(const EventStream& stream, Timestamp dt) {
    if (dt == 0 || dt > stream.duration()) {
        throw std::invalid_argument("accumulation interval " + std::to_string(dt) +
                                    " us outside (0, " + std::to_string(stream.duration()) + "]");
    }
}

double average_contrast_with(const EventStream& stream, Timestamp dt,
                             detail::ContrastKernel& kernel, std::vector<std::uint8_t>& occupancy,
                             std::vector<std::uint32_t>& on) {
    check_interval(stream, dt);
    const Timestamp m = stream.duration() / dt;
    const auto width = stream.geometry().width;
    auto events = stream.events();
    std::size_t i = stream.lower_index(stream.t_start());
    double total = 0.0;
    for (Timestamp j = 0; j < m; ++j) {
        const Timestamp end = stream.t_start() + (j + 1) * dt;
        on.clear();
        for (; i < events.size() && events[i].t < end; ++i) {
            const auto p = std::uint32_t(events[i].y) * width + events[i].x;
            if (!occupancy[p]) {
                occupancy[p] = kPixelOn;
                on.push_back(p);
            }
        }
        total += kernel.evaluate(occupancy, on);
        for (auto p : on) occupancy[p] = 0;
    }
    return total / double(m);
}

// Scratch buffers for one worker.
struct Workspace {
    explicit Workspace(SensorGeometry g) : kernel(g), occupancy(g.pixel_count(), 0) {}
    detail::ContrastKernel kernel;
    std::vector<std::uint8_t> occupancy;
    std::vector<std::uint32_t> on;
};

}  // namespace

double average_contrast(const EventStream& stream, Timestamp dt) {
    Workspace ws(stream.geometry());
    return average_contrast_with(stream, dt, ws.kernel, ws.occupancy, ws.on);
}

namespace {

std::vector<ContrastCurve> compute_curves(const std::vector<const EventStream*>& streams,
                                          const IntervalGrid& grid, unsigned workers) {
    for (const EventStream* stream : streams) {
        for (Timestamp dt : grid.intervals()) check_interval(*stream, dt);
    }
    const std::size_t per_stream = grid.size();
    std::vector<std::vector<double>> values(streams.size(), std::vector<double>(per_stream));
    parallel_for(
        streams.size() * per_stream,
        [&](std::size_t task) {
            const std::size_t s = task / per_stream;
            const std::size_t g = task % per_stream;
            const EventStream& stream = *streams[s];
            Workspace ws(stream.geometry());
            values[s][g] = average_contrast_with(stream, grid[g], ws.kernel, ws.occupancy, ws.on);
        },
        workers);

    std::vector<ContrastCurve> curves(streams.size());
    for (std::size_t s = 0; s < streams.size(); ++s) {
        for (std::size_t g = 0; g < per_stream; ++g) {
            curves[s].points.push_back({grid[g], values[s][g]});
        }
    }
    return curves;
}

}  // namespace

ContrastCurve ccc(const EventStream& stream, const IntervalGrid& grid, unsigned workers) {
    return std::move(compute_curves({&stream}, grid, workers).front());
}

AoccResult aocc(const ContrastCurve& curve) {
    AoccResult r;
    r.curve = curve;
    Timestamp prev_dt = 0;
    double prev_c = 0.0;
    std::vector<Timestamp> dts;
    for (const auto& pt : curve.points) {
        r.aocc_sum += pt.c_avg;
        r.aocc_trapezoid += double(pt.dt - prev_dt) * (prev_c + pt.c_avg) / 2.0;
        prev_dt = pt.dt;
        prev_c = pt.c_avg;
        dts.push_back(pt.dt);
    }
    r.grid = IntervalGrid(std::move(dts));
    return r;
}

AoccResult evaluate_aocc(const EventStream& stream, const IntervalGrid& grid, unsigned workers) {
    AoccResult r = aocc(ccc(stream, grid, workers));
    r.grid = grid;
    return r;
}

SweepResult sweep(const std::vector<std::pair<double, EventStream>>& streams,
                  const IntervalGrid& grid, unsigned workers) {
    if (streams.empty()) throw std::invalid_argument("sweep needs at least one stream");
    std::vector<const EventStream*> ptrs;
    for (const auto& entry : streams) ptrs.push_back(&entry.second);
    auto curves = compute_curves(ptrs, grid, workers);

    SweepResult out;
    for (std::size_t s = 0; s < streams.size(); ++s) {
        AoccResult r = aocc(curves[s]);
        r.grid = grid;
        out.entries.push_back({streams[s].first, std::move(r)});
        if (out.entries[s].result.aocc_sum > out.entries[out.argmax].result.aocc_sum) {
            out.argmax = s;
        }
    }
    return out;
}

}  // namespace aocc
