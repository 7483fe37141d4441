#include "aocc/labeled_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace aocc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_labels(const EventStream& input) {
    if (!input.labeled()) throw MissingLabelError("labeled metrics need a labeled input stream");
}

void tally(ConfusionCounts& c, Label label, bool kept) {
    if (label == Label::Signal) {
        ++(kept ? c.tp : c.fn);
    } else {
        ++(kept ? c.fp : c.tn);
    }
}

double ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? kNaN : double(num) / double(den);
}

}  // namespace

ConfusionCounts confusion(const EventStream& input, const EventStream& kept) {
    require_labels(input);
    const bool match_labels = kept.labeled();
    ConfusionCounts c;
    std::size_t k = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        bool hit = k < kept.size() && input[i] == kept[k] &&
                   (!match_labels || input.labels()[i] == kept.labels()[k]);
        tally(c, input.labels()[i], hit);
        if (hit) ++k;
    }
    if (k != kept.size()) {
        throw ConsistencyError("kept event " + std::to_string(k) +
                               " does not occur in the input in order");
    }
    return c;
}

ConfusionCounts confusion_from_mask(const EventStream& input, const std::vector<bool>& keep) {
    require_labels(input);
    if (keep.size() != input.size()) {
        throw ConsistencyError("keep mask length does not match the input");
    }
    ConfusionCounts c;
    for (std::size_t i = 0; i < input.size(); ++i) tally(c, input.labels()[i], keep[i]);
    return c;
}

MetricsReport report(const ConfusionCounts& counts) {
    MetricsReport r;
    r.counts = counts;
    r.nerr = ratio(counts.tn, counts.tn + counts.fp);
    r.verr = ratio(counts.fn, counts.fn + counts.tp);
    r.acc = ratio(counts.tp + counts.tn, counts.total());
    r.tpr = 1.0 - r.verr;
    r.fpr = 1.0 - r.nerr;
    if (counts.tp == 0 && counts.fp == 0) {
        r.snr_db = kNaN;
    } else if (counts.fp == 0) {
        r.snr_db = kInf;
    } else if (counts.tp == 0) {
        r.snr_db = -kInf;
    } else {
        r.snr_db = 10.0 * std::log10(double(counts.tp) / double(counts.fp));
    }
    return r;
}

double trapezoid_auc(std::span<const RocPoint> points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) / 2.0;
    }
    return area;
}

RocCurve roc(const ScoredStream& scored, std::span<const double> thresholds) {
    const EventStream& input = scored.stream;
    require_labels(input);
    if (thresholds.empty()) throw std::invalid_argument("ROC needs at least one threshold");

    std::uint64_t signal = 0;
    for (Label l : input.labels()) signal += l == Label::Signal;
    const std::uint64_t noise = input.size() - signal;
    if (signal == 0 || noise == 0) {
        throw DegenerateClassError("ROC needs both signal and noise events");
    }

    // Sort scores per class once; each threshold is then two binary searches.
    std::vector<double> sig_scores, noise_scores;
    sig_scores.reserve(signal);
    noise_scores.reserve(noise);
    for (std::size_t i = 0; i < input.size(); ++i) {
        (input.labels()[i] == Label::Signal ? sig_scores : noise_scores).push_back(scored.scores[i]);
    }
    std::sort(sig_scores.begin(), sig_scores.end());
    std::sort(noise_scores.begin(), noise_scores.end());
    auto kept_count = [](const std::vector<double>& sorted, double tau) {
        return std::uint64_t(sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), tau));
    };

    RocCurve curve;
    curve.points.push_back({0.0, 0.0, kNaN});
    for (double tau : thresholds) {
        ConfusionCounts c;
        c.tp = kept_count(sig_scores, tau);
        c.fn = signal - c.tp;
        c.fp = kept_count(noise_scores, tau);
        c.tn = noise - c.fp;
        MetricsReport r = report(c);
        curve.points.push_back({r.fpr, r.tpr, tau});
    }
    curve.points.push_back({1.0, 1.0, kNaN});
    std::stable_sort(curve.points.begin(), curve.points.end(),
                     [](const RocPoint& a, const RocPoint& b) {
                         return a.fpr < b.fpr || (a.fpr == b.fpr && a.tpr < b.tpr);
                     });
    curve.auc = trapezoid_auc(curve.points);
    return curve;
}

}  // namespace aocc
