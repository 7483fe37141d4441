#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aocc/event_core.hpp"

namespace aocc {

enum class DenoiserVariant { Dwf, ScoreThreshold, Passthrough };

enum class DistanceNorm { Chebyshev, Manhattan };

struct DenoiserConfig {
    DenoiserVariant variant = DenoiserVariant::Passthrough;
    std::uint32_t dwf_search_radius = 2;
    std::uint32_t dwf_buffer_size = 200;
    std::uint32_t dwf_support_count = 1;
    DistanceNorm dwf_norm = DistanceNorm::Chebyshev;
    double threshold = 0.5;

    static DenoiserConfig dwf(std::uint32_t radius, std::uint32_t buffer = 200,
                              std::uint32_t support = 1);
    static DenoiserConfig score_threshold(double tau);
    static DenoiserConfig passthrough() { return {}; }
};

/// Throws std::invalid_argument if `cfg` is not usable on `geometry`.
void validate_config(const DenoiserConfig& cfg, const SensorGeometry& geometry);

/// Per-event signal likelihoods in [0, 1], aligned with the stream's events.
struct ScoredStream {
    EventStream stream;
    std::vector<double> scores;

    ScoredStream(EventStream s, std::vector<double> sc);
};

/// Double window filter. Keeps two FIFO windows of `dwf_buffer_size` past
/// events, one of accepted and one of rejected events. An event is accepted
/// when at least `dwf_support_count` events across both windows lie within
/// `dwf_search_radius` of it. Returns the keep mask.
std::vector<bool> dwf_mask(const EventStream& stream, const DenoiserConfig& cfg);
EventStream dwf_denoise(const EventStream& stream, const DenoiserConfig& cfg);

/// Keeps exactly the events with score >= threshold.
std::vector<bool> threshold_mask(std::span<const double> scores, double threshold);
EventStream threshold_denoise(const ScoredStream& scored, double threshold);

/// Synthetic classifier: clamp(label + N(0, sigma), 0, 1) with Signal = 1 and
/// Noise = 0. Throws MissingLabelError on unlabeled input.
ScoredStream oracle_scores(const EventStream& stream, double noise_sigma, std::uint64_t seed);

/// Runs the configured variant. `scores` is required for ScoreThreshold only.
std::vector<bool> denoise_mask(const EventStream& stream, const DenoiserConfig& cfg,
                               std::span<const double> scores = {});
EventStream denoise(const EventStream& stream, const DenoiserConfig& cfg,
                    std::span<const double> scores = {});

/// Threshold grid 0.02, 0.04, ..., 0.98 for score sweeps.
std::vector<double> default_threshold_grid();

/// Search radii 2, 4, ..., 14 for DWF sweeps.
std::vector<std::uint32_t> default_dwf_radius_grid();

}  // namespace aocc
