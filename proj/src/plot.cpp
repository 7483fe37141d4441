#include "aocc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aocc/io_formats.hpp"
#include "aocc/tables.hpp"

namespace aocc {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// Roughly five "nice" ticks (1, 2, 5 times a power of ten) covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= 6.0) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
        ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    }
    return ticks;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series, const PlotOptions& options) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : series) {
        if (s.xs.size() != s.ys.size()) throw std::invalid_argument("series x/y length mismatch");
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            xmin = std::min(xmin, s.xs[i]);
            xmax = std::max(xmax, s.xs[i]);
            ymin = std::min(ymin, s.ys[i]);
            ymax = std::max(ymax, s.ys[i]);
        }
    }
    if (!(xmin <= xmax)) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    ymin = std::min(ymin, 0.0);
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double left = 70, right = 20, top = options.title.empty() ? 20 : 40, bottom = 50;
    const double pw = options.width - left - right;
    const double ph = options.height - top - bottom;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << num(options.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-size=\"15\">" << escape(options.title) << "</text>\n";
    }
    svg << "<g stroke=\"black\" fill=\"none\">\n";
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(left + pw)
        << "\" y2=\"" << num(top + ph) << "\"/>\n";
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(top + ph) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g class=\"x-ticks\">\n";
    for (double t : nice_ticks(xmin, xmax)) {
        svg << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(t))
            << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(top + ph + 18)
            << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    }
    svg << "</g>\n<g class=\"y-ticks\">\n";
    for (double t : nice_ticks(ymin, ymax)) {
        svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(left)
            << "\" y2=\"" << num(sy(t)) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(t) + 4)
            << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
    }
    svg << "</g>\n";
    if (!options.x_label.empty()) {
        svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(options.height - 10)
            << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg << "<text transform=\"translate(16," << num(top + ph / 2)
            << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";
    }

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << colour
            << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
            svg << (first ? "" : " ") << num(sx(s.xs[i])) << "," << num(sy(s.ys[i]));
            first = false;
        }
        svg << "\"/>\n";
    }

    svg << "<g class=\"legend\">\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double y = top + 12 + 16.0 * double(k);
        const double x = left + pw - 150;
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x + 20)
            << "\" y2=\"" << num(y) << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
            << "\" stroke-width=\"2\"/>";
        svg << "<text x=\"" << num(x + 26) << "\" y=\"" << num(y + 4) << "\">"
            << escape(series[k].label) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

Series load_series_csv(const std::string& path, PlotOptions& options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    NumericTable table = read_numeric_csv(in);
    Series s;
    s.label = path.substr(path.find_last_of('/') + 1);
    auto pick = [&](const char* xcol, const char* ycol, double xscale, const char* xl,
                    const char* yl) {
        const int xi = table.column(xcol);
        const int yi = table.column(ycol);
        if (xi < 0 || yi < 0) return false;
        for (const auto& row : table.rows) {
            s.xs.push_back(row[std::size_t(xi)] * xscale);
            s.ys.push_back(row[std::size_t(yi)]);
        }
        if (options.x_label.empty()) options.x_label = xl;
        if (options.y_label.empty()) options.y_label = yl;
        return true;
    };
    if (pick("dt_us", "c_avg", 1e-3, "interval (ms)", "average contrast")) return s;
    if (pick("param", "aocc_sum", 1.0, "parameter", "AOCC")) return s;
    if (pick("fpr", "tpr", 1.0, "FPR", "TPR")) return s;
    throw ParseError(0, "'" + path + "' is not a curve, sweep or ROC table");
}

}  // namespace aocc
