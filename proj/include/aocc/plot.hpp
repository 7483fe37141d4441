#pragma once

#include <string>
#include <vector>

namespace aocc {

struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct PlotOptions {
    int width = 640;
    int height = 420;
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Static line chart with axes, ticks and a legend. Output depends only on the
/// inputs, so renders can be diffed.
std::string render_svg(const std::vector<Series>& series, const PlotOptions& options);

/// Loads a curve, sweep or ROC table written by the command-line tool and
/// picks the natural axes: (dt ms, c_avg), (param, aocc_sum) or (fpr, tpr).
/// Fills in axis labels on `options` when they are empty.
Series load_series_csv(const std::string& path, PlotOptions& options);

}  // namespace aocc
