#pragma once

// Independent reference implementations used as oracles by the tests and the
// acceptance runner. They favour obviousness over speed and share no code with
// the library beyond the data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "aocc/aocc.hpp"

namespace aocc::testing {

// Sorted random stream with uniformly drawn coordinates and polarities.
inline EventStream random_stream(SensorGeometry g, std::size_t n, Timestamp t0, Timestamp t1,
                                 std::uint64_t seed, bool labeled = false) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Timestamp> t(t0, t1);
    std::uniform_int_distribution<std::uint32_t> x(0, g.width - 1), y(0, g.height - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<Event> ev(n);
    for (auto& e : ev) {
        e.t = t(rng);
        e.x = std::uint16_t(x(rng));
        e.y = std::uint16_t(y(rng));
        e.p = coin(rng) ? 1 : -1;
    }
    std::stable_sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    if (!labeled) return EventStream(g, std::move(ev), t0, t1);
    std::vector<Label> lb(n);
    for (auto& l : lb) l = coin(rng) ? Label::Signal : Label::Noise;
    return EventStream(g, std::move(ev), t0, t1, std::move(lb));
}

// Random binary frame with the given on-probability.
inline EventFrame random_frame(SensorGeometry g, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution on(density);
    EventFrame f(g, 0, 1);
    for (auto& v : f.occupancy) v = on(rng) ? kPixelOn : 0;
    return f;
}

// Textbook Sobel with explicit kernels, replicate padding, then the sample
// standard deviation by the two-pass formula.
inline double naive_contrast(const EventFrame& f) {
    static constexpr std::array<std::array<int, 3>, 3> kx{{{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}}};
    static constexpr std::array<std::array<int, 3>, 3> ky{{{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}}};
    const long w = f.geometry.width, h = f.geometry.height;
    std::vector<double> mag;
    mag.reserve(std::size_t(w * h));
    for (long y = 0; y < h; ++y) {
        for (long x = 0; x < w; ++x) {
            double gx = 0, gy = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    long sx = std::clamp(x + dx, 0L, w - 1), sy = std::clamp(y + dy, 0L, h - 1);
                    double v = f.occupancy[std::size_t(sy * w + sx)];
                    gx += kx[std::size_t(dy + 1)][std::size_t(dx + 1)] * v;
                    gy += ky[std::size_t(dy + 1)][std::size_t(dx + 1)] * v;
                }
            }
            mag.push_back(std::hypot(gx, gy));
        }
    }
    double mean = 0;
    for (double m : mag) mean += m;
    mean /= double(mag.size());
    double ss = 0;
    for (double m : mag) ss += (m - mean) * (m - mean);
    return std::sqrt(ss / double(mag.size() - 1));
}

// Average contrast straight from the definition: build each window's frame
// from scratch by scanning the whole stream.
inline double naive_average_contrast(const EventStream& s, Timestamp dt) {
    const Timestamp m = s.duration() / dt;
    double total = 0;
    for (Timestamp j = 0; j < m; ++j) {
        EventFrame f(s.geometry(), s.t_start() + j * dt, s.t_start() + (j + 1) * dt);
        for (const Event& e : s.events()) {
            if (e.t >= f.t0 && e.t < f.t1) f.at(e.x, e.y) = kPixelOn;
        }
        total += naive_contrast(f);
    }
    return total / double(m);
}

// DWF by rescanning the complete decision history: the accepted and rejected
// windows are the last `buffer` events of each kind.
inline std::vector<bool> naive_dwf(const EventStream& s, std::uint32_t radius, std::uint32_t buffer,
                                   std::uint32_t support, bool manhattan = false) {
    std::vector<bool> keep(s.size());
    std::vector<std::size_t> accepted, rejected;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto near = [&](std::size_t j) {
            long dx = std::labs(long(s[i].x) - long(s[j].x));
            long dy = std::labs(long(s[i].y) - long(s[j].y));
            return manhattan ? dx + dy <= long(radius) : std::max(dx, dy) <= long(radius);
        };
        std::uint32_t hits = 0;
        for (const auto* hist : {&accepted, &rejected}) {
            std::size_t from = hist->size() > buffer ? hist->size() - buffer : 0;
            for (std::size_t k = from; k < hist->size(); ++k) hits += near((*hist)[k]);
        }
        keep[i] = hits >= support;
        (keep[i] ? accepted : rejected).push_back(i);
    }
    return keep;
}

// ESR straight from the sums over every pixel.
inline EsrResult naive_esr(const std::vector<std::uint64_t>& counts, double m) {
    double n = 0;
    for (auto c : counts) n += double(c);
    double pairs = 0, ln = 0;
    for (auto c : counts) {
        pairs += double(c) * (double(c) - 1);
        ln += 1.0 - std::pow(1.0 - m / n, double(c));
    }
    EsrResult r;
    r.ntss = pairs / (n * (n - 1));
    r.ln = ln;
    r.esr = std::sqrt(r.ntss * r.ln);
    r.m = m;
    return r;
}

inline bool near_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace aocc::testing
