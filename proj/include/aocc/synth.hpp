#pragma once

#include <cstdint>
#include <string>

#include "aocc/event_core.hpp"

namespace aocc {

enum class SceneKind {
    MovingBar,     // one vertical bar crossing the sensor horizontally, wrapping around
    Grating,       // periodic vertical bars moving horizontally
    Checkerboard,  // checkerboard translating diagonally
    RotatingEdge,  // half-plane edge rotating about the sensor centre
};

SceneKind parse_scene_kind(const std::string& name);
std::string to_string(SceneKind kind);

/// Desk-scale synthetic scenes: a binary pattern moves across the sensor and
/// each pixel fires whenever the pattern value under its centre flips (ON for
/// 0 -> 1, OFF for 1 -> 0). The pattern is sampled every `step_us`; a flip
/// fires with probability `fire_probability`, delayed by a uniform jitter in
/// [0, jitter_us).
struct SceneConfig {
    SceneKind kind = SceneKind::MovingBar;
    SensorGeometry geometry{64, 64};
    Timestamp duration_us = 2'000'000;
    double speed = 64.0;             // px/s, or rad/s for RotatingEdge
    std::uint32_t feature_size = 8;  // bar width, half grating period, square side
    double fire_probability = 0.9;
    Timestamp jitter_us = 1000;
    Timestamp step_us = 100;
    std::uint64_t seed = 1;
};

/// Unlabeled stream with recording window [0, duration_us].
EventStream synthesize(const SceneConfig& cfg);

}  // namespace aocc
