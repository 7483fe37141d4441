#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "aocc/denoise_baselines.hpp"
#include "aocc/event_core.hpp"

namespace aocc {

/// `kept` is not an order-preserving subsequence of the input.
class ConsistencyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ROC requested on input that contains only one class.
class DegenerateClassError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ConfusionCounts {
    std::uint64_t tp = 0;  // signal kept
    std::uint64_t tn = 0;  // noise removed
    std::uint64_t fp = 0;  // noise kept
    std::uint64_t fn = 0;  // signal removed

    std::uint64_t total() const { return tp + tn + fp + fn; }
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Rates follow the usual conventions with explicit sentinels: a rate whose
/// denominator is zero is NaN, and SNR is +inf when fp = 0 < tp, -inf when
/// tp = 0 < fp, NaN when both are zero.
struct MetricsReport {
    ConfusionCounts counts;
    double nerr = 0.0;    // tn / (tn + fp)
    double verr = 0.0;    // fn / (fn + tp)
    double snr_db = 0.0;  // 10 log10(tp / fp)
    double acc = 0.0;     // (tp + tn) / total
    double tpr = 0.0;     // 1 - verr
    double fpr = 0.0;     // 1 - nerr
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    double threshold = 0.0;  // NaN for the (0,0) and (1,1) anchors
};

struct RocCurve {
    std::vector<RocPoint> points;  // sorted by fpr, then tpr
    double auc = 0.0;
};

/// Matches `kept` against `input` by a single forward scan on (t, x, y, p),
/// and on label too when `kept` is labeled.
ConfusionCounts confusion(const EventStream& input, const EventStream& kept);

/// Counts from a keep mask aligned with the labeled input.
ConfusionCounts confusion_from_mask(const EventStream& input, const std::vector<bool>& keep);

MetricsReport report(const ConfusionCounts& counts);

/// One point per threshold (event kept when score >= threshold) plus the
/// (0,0) and (1,1) anchors; AUC by the trapezoidal rule over fpr.
RocCurve roc(const ScoredStream& scored, std::span<const double> thresholds);

/// Trapezoidal area under (fpr, tpr) points, which must be sorted by fpr.
double trapezoid_auc(std::span<const RocPoint> points);

}  // namespace aocc
