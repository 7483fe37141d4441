#include "aocc/denoise_baselines.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace aocc {

DenoiserConfig DenoiserConfig::dwf(std::uint32_t radius, std::uint32_t buffer,
                                   std::uint32_t support) {
    DenoiserConfig cfg;
    cfg.variant = DenoiserVariant::Dwf;
    cfg.dwf_search_radius = radius;
    cfg.dwf_buffer_size = buffer;
    cfg.dwf_support_count = support;
    return cfg;
}

DenoiserConfig DenoiserConfig::score_threshold(double tau) {
    DenoiserConfig cfg;
    cfg.variant = DenoiserVariant::ScoreThreshold;
    cfg.threshold = tau;
    return cfg;
}

void validate_config(const DenoiserConfig& cfg, const SensorGeometry& geometry) {
    switch (cfg.variant) {
        case DenoiserVariant::Dwf: {
            const auto max_dim = std::max(geometry.width, geometry.height);
            if (cfg.dwf_search_radius < 1 || cfg.dwf_search_radius > max_dim) {
                throw std::invalid_argument("DWF search radius must lie in [1, " +
                                            std::to_string(max_dim) + "]");
            }
            if (cfg.dwf_buffer_size < 1) {
                throw std::invalid_argument("DWF buffer size must be positive");
            }
            if (cfg.dwf_support_count < 1) {
                throw std::invalid_argument("DWF support count must be positive");
            }
            break;
        }
        case DenoiserVariant::ScoreThreshold:
            if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) {
                throw std::invalid_argument("score threshold must lie in [0, 1]");
            }
            break;
        case DenoiserVariant::Passthrough:
            break;
    }
}

ScoredStream::ScoredStream(EventStream s, std::vector<double> sc)
    : stream(std::move(s)), scores(std::move(sc)) {
    if (scores.size() != stream.size()) {
        throw std::invalid_argument("score count " + std::to_string(scores.size()) +
                                    " does not match event count " +
                                    std::to_string(stream.size()));
    }
}

namespace {

// Fixed-capacity FIFO of pixel coordinates.
class PixelRing {
public:
    explicit PixelRing(std::size_t capacity) : xs_(capacity), ys_(capacity) {}

    void push(std::int32_t x, std::int32_t y) {
        xs_[head_] = x;
        ys_[head_] = y;
        head_ = head_ + 1 == xs_.size() ? 0 : head_ + 1;
        size_ = std::min(size_ + 1, xs_.size());
    }

    // Number of stored pixels within `radius`, stopping early at `enough`.
    template <typename Dist>
    std::uint32_t count_near(std::int32_t x, std::int32_t y, std::int32_t radius,
                             std::uint32_t enough, Dist dist) const {
        std::uint32_t n = 0;
        for (std::size_t i = 0; i < size_ && n < enough; ++i) {
            if (dist(xs_[i] - x, ys_[i] - y) <= radius) ++n;
        }
        return n;
    }

private:
    std::vector<std::int32_t> xs_, ys_;
    std::size_t head_ = 0;
    std::size_t size_ = 0;
};

template <typename Dist>
std::vector<bool> run_dwf(const EventStream& stream, const DenoiserConfig& cfg, Dist dist) {
    PixelRing accepted(cfg.dwf_buffer_size);
    PixelRing rejected(cfg.dwf_buffer_size);
    const auto radius = std::int32_t(cfg.dwf_search_radius);
    const auto need = cfg.dwf_support_count;
    std::vector<bool> keep(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const std::int32_t x = stream[i].x;
        const std::int32_t y = stream[i].y;
        std::uint32_t support = accepted.count_near(x, y, radius, need, dist);
        if (support < need) support += rejected.count_near(x, y, radius, need - support, dist);
        if (support >= need) {
            keep[i] = true;
            accepted.push(x, y);
        } else {
            rejected.push(x, y);
        }
    }
    return keep;
}

}  // namespace

std::vector<bool> dwf_mask(const EventStream& stream, const DenoiserConfig& cfg) {
    if (cfg.variant != DenoiserVariant::Dwf) {
        throw std::invalid_argument("dwf_mask needs a DWF configuration");
    }
    validate_config(cfg, stream.geometry());
    if (cfg.dwf_norm == DistanceNorm::Chebyshev) {
        return run_dwf(stream, cfg, [](std::int32_t dx, std::int32_t dy) {
            return std::max(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
        });
    }
    return run_dwf(stream, cfg, [](std::int32_t dx, std::int32_t dy) {
        return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
    });
}

EventStream dwf_denoise(const EventStream& stream, const DenoiserConfig& cfg) {
    return select(stream, dwf_mask(stream, cfg));
}

std::vector<bool> threshold_mask(std::span<const double> scores, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("score threshold must lie in [0, 1]");
    }
    std::vector<bool> keep(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) keep[i] = scores[i] >= threshold;
    return keep;
}

EventStream threshold_denoise(const ScoredStream& scored, double threshold) {
    return select(scored.stream, threshold_mask(scored.scores, threshold));
}

ScoredStream oracle_scores(const EventStream& stream, double noise_sigma, std::uint64_t seed) {
    if (!stream.labeled()) {
        throw MissingLabelError("oracle scores need a labeled stream");
    }
    if (!(noise_sigma >= 0.0)) {
        throw std::invalid_argument("oracle noise sigma must be non-negative");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> jitter(0.0, 1.0);
    std::vector<double> scores(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i) {
        double base = stream.labels()[i] == Label::Signal ? 1.0 : 0.0;
        double s = noise_sigma > 0.0 ? base + noise_sigma * jitter(rng) : base;
        scores[i] = std::clamp(s, 0.0, 1.0);
    }
    return ScoredStream(stream, std::move(scores));
}

std::vector<bool> denoise_mask(const EventStream& stream, const DenoiserConfig& cfg,
                               std::span<const double> scores) {
    validate_config(cfg, stream.geometry());
    switch (cfg.variant) {
        case DenoiserVariant::Dwf:
            return dwf_mask(stream, cfg);
        case DenoiserVariant::ScoreThreshold:
            if (scores.size() != stream.size()) {
                throw std::invalid_argument("score threshold denoiser needs one score per event");
            }
            return threshold_mask(scores, cfg.threshold);
        case DenoiserVariant::Passthrough:
            break;
    }
    return std::vector<bool>(stream.size(), true);
}

EventStream denoise(const EventStream& stream, const DenoiserConfig& cfg,
                    std::span<const double> scores) {
    return select(stream, denoise_mask(stream, cfg, scores));
}

std::vector<double> default_threshold_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 49; ++k) grid.push_back(k / 50.0);
    return grid;
}

std::vector<std::uint32_t> default_dwf_radius_grid() {
    std::vector<std::uint32_t> grid;
    for (std::uint32_t r = 2; r <= 14; r += 2) grid.push_back(r);
    return grid;
}

}  // namespace aocc
