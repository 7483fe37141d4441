#include "aocc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace aocc {

SceneKind parse_scene_kind(const std::string& name) {
    if (name == "bar") return SceneKind::MovingBar;
    if (name == "grating") return SceneKind::Grating;
    if (name == "checkerboard") return SceneKind::Checkerboard;
    if (name == "edge") return SceneKind::RotatingEdge;
    throw std::invalid_argument("unknown scene '" + name + "' (bar, grating, checkerboard, edge)");
}

std::string to_string(SceneKind kind) {
    switch (kind) {
        case SceneKind::MovingBar: return "bar";
        case SceneKind::Grating: return "grating";
        case SceneKind::Checkerboard: return "checkerboard";
        case SceneKind::RotatingEdge: return "edge";
    }
    return "unknown";
}

namespace {

double wrap(double v, double period) {
    double r = std::fmod(v, period);
    return r < 0 ? r + period : r;
}

// Column and row factors of the separable patterns: the pixel value is
// column(x) XOR row(y).
bool column_value(const SceneConfig& cfg, double px, double t) {
    const double s = cfg.feature_size;
    switch (cfg.kind) {
        case SceneKind::MovingBar: {
            // The bar leaves the sensor completely before re-entering.
            const double span = cfg.geometry.width + s;
            const double lead = wrap(cfg.speed * t, span);
            return px < lead && px >= lead - s;
        }
        case SceneKind::Grating:
            return wrap(px - cfg.speed * t, 2 * s) < s;
        case SceneKind::Checkerboard:
            return wrap(px - cfg.speed * t / std::numbers::sqrt2, 2 * s) < s;
        case SceneKind::RotatingEdge:
            break;
    }
    return false;
}

bool row_value(const SceneConfig& cfg, double py, double t) {
    if (cfg.kind != SceneKind::Checkerboard) return false;
    return wrap(py - cfg.speed * t / std::numbers::sqrt2, 2.0 * cfg.feature_size) < cfg.feature_size;
}

bool edge_value(const SceneConfig& cfg, double px, double py, double t) {
    const double a = cfg.speed * t;
    const double dx = px - cfg.geometry.width / 2.0;
    const double dy = py - cfg.geometry.height / 2.0;
    return dx * std::cos(a) + dy * std::sin(a) >= 0.0;
}

struct Emitter {
    const SceneConfig& cfg;
    std::mt19937_64 rng;
    std::bernoulli_distribution fire;
    std::uniform_int_distribution<Timestamp> jitter;
    std::vector<Event> events;

    explicit Emitter(const SceneConfig& c)
        : cfg(c), rng(c.seed), fire(c.fire_probability), jitter(0, c.jitter_us > 0 ? c.jitter_us - 1 : 0) {}

    void flip(Timestamp t, std::uint32_t x, std::uint32_t y, bool now) {
        if (!fire(rng)) return;
        const Timestamp te = t + jitter(rng);
        if (te >= cfg.duration_us) return;
        events.push_back({te, std::uint16_t(x), std::uint16_t(y), std::int8_t(now ? 1 : -1)});
    }
};

void separable_scene(Emitter& em) {
    const auto& cfg = em.cfg;
    const auto w = cfg.geometry.width;
    const auto h = cfg.geometry.height;
    std::vector<std::uint8_t> cols(w), rows(h);
    for (std::uint32_t x = 0; x < w; ++x) cols[x] = column_value(cfg, x + 0.5, 0.0);
    for (std::uint32_t y = 0; y < h; ++y) rows[y] = row_value(cfg, y + 0.5, 0.0);
    std::vector<std::uint8_t> col_flip(w), row_flip(h);
    for (Timestamp t = cfg.step_us; t < cfg.duration_us; t += cfg.step_us) {
        const double ts = double(t) * 1e-6;
        bool any = false;
        for (std::uint32_t x = 0; x < w; ++x) {
            const bool v = column_value(cfg, x + 0.5, ts);
            col_flip[x] = v != bool(cols[x]);
            cols[x] = v;
            any |= bool(col_flip[x]);
        }
        for (std::uint32_t y = 0; y < h; ++y) {
            const bool v = row_value(cfg, y + 0.5, ts);
            row_flip[y] = v != bool(rows[y]);
            rows[y] = v;
            any |= bool(row_flip[y]);
        }
        if (!any) continue;
        // A pixel flips when exactly one of its factors flips.
        for (std::uint32_t y = 0; y < h; ++y) {
            for (std::uint32_t x = 0; x < w; ++x) {
                if (col_flip[x] != row_flip[y]) em.flip(t, x, y, cols[x] != rows[y]);
            }
        }
    }
}

void rotating_edge(Emitter& em) {
    const auto& cfg = em.cfg;
    const auto w = cfg.geometry.width;
    const auto h = cfg.geometry.height;
    std::vector<std::uint8_t> state(cfg.geometry.pixel_count());
    for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            state[std::size_t(y) * w + x] = edge_value(cfg, x + 0.5, y + 0.5, 0.0);
        }
    }
    for (Timestamp t = cfg.step_us; t < cfg.duration_us; t += cfg.step_us) {
        const double ts = double(t) * 1e-6;
        for (std::uint32_t y = 0; y < h; ++y) {
            for (std::uint32_t x = 0; x < w; ++x) {
                auto& prev = state[std::size_t(y) * w + x];
                const bool now = edge_value(cfg, x + 0.5, y + 0.5, ts);
                if (now == bool(prev)) continue;
                prev = now;
                em.flip(t, x, y, now);
            }
        }
    }
}

}  // namespace

EventStream synthesize(const SceneConfig& cfg) {
    if (cfg.geometry.pixel_count() == 0) throw std::invalid_argument("scene needs pixels");
    if (!(cfg.speed > 0.0)) throw std::invalid_argument("scene speed must be positive");
    if (cfg.feature_size == 0) throw std::invalid_argument("scene feature size must be positive");
    if (cfg.step_us == 0) throw std::invalid_argument("scene time step must be positive");
    if (!(cfg.fire_probability >= 0.0 && cfg.fire_probability <= 1.0)) {
        throw std::invalid_argument("fire probability must lie in [0, 1]");
    }

    Emitter em(cfg);
    if (cfg.kind == SceneKind::RotatingEdge) {
        rotating_edge(em);
    } else {
        separable_scene(em);
    }
    auto& events = em.events;
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.t < b.t; });
    return EventStream(cfg.geometry, std::move(events), 0, cfg.duration_us);
}

}  // namespace aocc
