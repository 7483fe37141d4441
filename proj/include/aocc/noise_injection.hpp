#pragma once

#include <array>
#include <cstdint>

#include "aocc/event_core.hpp"

namespace aocc {

struct NoiseConfig {
    double rate = 0.0;  // events per second per pixel
    std::uint64_t seed = 0;
    double polarity_split = 0.5;  // probability of an ON event
};

/// Background-activity noise levels used for benchmark sweeps, in Hz/pixel.
inline constexpr std::array<double, 3> kNoiseRatePresets{1.0, 3.0, 5.0};

/// Expected number of injected events: rate * duration[s] * pixel count.
double expected_noise_count(const EventStream& stream, double rate);

/// Homogeneous Poisson background noise over the stream's recording window
/// and full sensor, labeled Noise.
EventStream generate_noise(const EventStream& stream, const NoiseConfig& cfg);

/// Merges generated noise into `stream`. Unlabeled input events become Signal;
/// an already-labeled input keeps its labels so injections can be stacked.
EventStream inject(const EventStream& stream, const NoiseConfig& cfg);

}  // namespace aocc
