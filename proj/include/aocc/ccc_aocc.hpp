#pragma once

#include <utility>
#include <vector>

#include "aocc/event_core.hpp"

namespace aocc {

/// Strictly increasing, positive accumulation intervals in microseconds.
class IntervalGrid {
public:
    IntervalGrid() = default;
    /// Throws std::invalid_argument unless every interval is positive and the
    /// sequence strictly increases.
    explicit IntervalGrid(std::vector<Timestamp> intervals);

    /// first, first + step, ... up to and including `last` when reachable.
    static IntervalGrid uniform(Timestamp first, Timestamp last, Timestamp step);
    /// 2 ms to 400 ms in 2 ms steps.
    static IntervalGrid standard();
    /// 1 ms to 60 ms in 1 ms steps, then 65 ms to 85 ms in 5 ms steps.
    static IntervalGrid coarse();

    const std::vector<Timestamp>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    Timestamp operator[](std::size_t i) const { return intervals_[i]; }

    friend bool operator==(const IntervalGrid&, const IntervalGrid&) = default;

private:
    std::vector<Timestamp> intervals_;
};

struct CurvePoint {
    Timestamp dt = 0;
    double c_avg = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Average frame contrast as a function of the accumulation interval.
struct ContrastCurve {
    std::vector<CurvePoint> points;

    std::size_t argmax() const;
    double max() const;
};

struct AoccResult {
    double aocc_sum = 0.0;        // plain sum of the curve values
    double aocc_trapezoid = 0.0;  // interval-weighted area in contrast * us, anchored at (0, 0)
    ContrastCurve curve;
    IntervalGrid grid;
};

/// Mean contrast of the m = floor(duration / dt) half-open windows
/// [t_start + j*dt, t_start + (j+1)*dt). Events past m*dt are ignored.
/// Throws std::invalid_argument unless 0 < dt <= duration.
double average_contrast(const EventStream& stream, Timestamp dt);

/// One curve point per grid interval, computed in parallel.
ContrastCurve ccc(const EventStream& stream, const IntervalGrid& grid, unsigned workers = 0);

AoccResult aocc(const ContrastCurve& curve);

/// aocc(ccc(stream, grid)) with the grid attached.
AoccResult evaluate_aocc(const EventStream& stream, const IntervalGrid& grid, unsigned workers = 0);

struct SweepEntry {
    double parameter = 0.0;
    AoccResult result;
};

struct SweepResult {
    std::vector<SweepEntry> entries;  // input order
    std::size_t argmax = 0;           // by aocc_sum, first on ties
};

/// AOCC for every (parameter, stream) pair; all curve points of all entries
/// share one worker pool. Throws std::invalid_argument on empty input.
SweepResult sweep(const std::vector<std::pair<double, EventStream>>& streams,
                  const IntervalGrid& grid, unsigned workers = 0);

}  // namespace aocc
