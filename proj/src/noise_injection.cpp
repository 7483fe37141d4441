#include "aocc/noise_injection.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace aocc {

namespace {

void check_config(const EventStream& stream, const NoiseConfig& cfg) {
    if (!(cfg.rate >= 0.0)) {
        throw std::invalid_argument("noise rate must be non-negative");
    }
    if (!(cfg.polarity_split >= 0.0 && cfg.polarity_split <= 1.0)) {
        throw std::invalid_argument("polarity split must lie in [0, 1]");
    }
    if (cfg.rate > 0.0 && stream.duration() == 0) {
        throw std::invalid_argument("noise injection needs a recording window with T > 0");
    }
}

}  // namespace

double expected_noise_count(const EventStream& stream, double rate) {
    return rate * double(stream.duration()) * 1e-6 * double(stream.geometry().pixel_count());
}

EventStream generate_noise(const EventStream& stream, const NoiseConfig& cfg) {
    check_config(stream, cfg);
    const auto& g = stream.geometry();
    std::vector<Event> noise;
    const double mean = expected_noise_count(stream, cfg.rate);
    if (mean > 0.0) {
        // One global count with uniform positions and times is the same
        // distribution as independent per-pixel processes.
        std::mt19937_64 rng(cfg.seed);
        std::poisson_distribution<std::uint64_t> count_dist(mean);
        const std::uint64_t count = count_dist(rng);
        std::uniform_int_distribution<Timestamp> t_dist(stream.t_start(), stream.t_end() - 1);
        std::uniform_int_distribution<std::uint32_t> x_dist(0, g.width - 1);
        std::uniform_int_distribution<std::uint32_t> y_dist(0, g.height - 1);
        std::bernoulli_distribution on_dist(cfg.polarity_split);
        noise.resize(count);
        for (auto& e : noise) {
            e.t = t_dist(rng);
            e.x = std::uint16_t(x_dist(rng));
            e.y = std::uint16_t(y_dist(rng));
            e.p = on_dist(rng) ? 1 : -1;
        }
        std::stable_sort(noise.begin(), noise.end(),
                         [](const Event& a, const Event& b) { return a.t < b.t; });
    }
    std::vector<Label> labels(noise.size(), Label::Noise);
    return EventStream(g, std::move(noise), stream.t_start(), stream.t_end(), std::move(labels));
}

EventStream inject(const EventStream& stream, const NoiseConfig& cfg) {
    EventStream noise = generate_noise(stream, cfg);
    EventStream signal = stream.labeled() ? stream : stream.with_uniform_label(Label::Signal);
    return merge(signal, noise);
}

}  // namespace aocc
