#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aocc/event_core.hpp"

namespace aocc {

/// Per-pixel event counts at native coordinates (no motion compensation).
struct EventCountImage {
    SensorGeometry geometry;
    std::vector<std::uint64_t> counts;  // row-major, one per pixel
    std::uint64_t total = 0;

    std::size_t pixel_count() const { return counts.size(); }
};

struct EsrResult {
    double ntss = 0.0;
    double ln = 0.0;
    double esr = 0.0;
    double m = 0.0;  // reference event count actually used
};

/// Counts every event of the stream.
EventCountImage count_image(const EventStream& stream);

/// Counts events with t0 <= t < t1. Throws RangeError outside the recording window.
EventCountImage count_image(const EventStream& stream, Timestamp t0, Timestamp t1);

/// NTSS = sum n(n-1) / (N(N-1)), LN = K - sum (1 - M/N)^n, ESR = sqrt(NTSS * LN).
/// M defaults to N. Throws DegenerateInputError when N < 2 and
/// std::invalid_argument when M is not in (0, N].
EsrResult esr(const EventCountImage& image, std::optional<double> m = {});

/// Mean ESR over consecutive windows of `window_us` anchored at t_start.
/// Windows holding fewer than two events are skipped; M, when given, applies
/// to every window and must not exceed any window's count. Throws
/// DegenerateInputError if no window qualifies.
EsrResult esr_windowed(const EventStream& stream, Timestamp window_us,
                       std::optional<double> m = {});

}  // namespace aocc
