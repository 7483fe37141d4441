// aocc: event-camera denoising evaluation from the command line.
//
//   aocc synth   --scene bar -o clean.csv
//   aocc inject  -i clean.csv --rate 5 --seed 7 -o noisy.csv
//   aocc denoise -i noisy.csv --method dwf --radius 4 --buffer 200 -o dwf.csv
//   aocc eval    -i noisy.csv --kept dwf.csv --labeled --esr
//   aocc ccc     -i dwf.csv -o curve.csv
//   aocc sweep   -i noisy.csv --method dwf --params 2,4,6,8,10,12,14 -o sweep.csv
//   aocc roc     -i noisy.csv --scores scores.csv
//   aocc plot    -i curve.csv -i other.csv -o curves.svg

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aocc/aocc.hpp"

namespace {

using namespace aocc;

struct CommonIo {
    std::string input;
    std::string output;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
};

std::optional<SensorGeometry> geometry_hint(const CommonIo& io) {
    if (io.width && io.height) return SensorGeometry{io.width, io.height};
    return std::nullopt;
}

EventStream load(const CommonIo& io) { return read_stream_file(io.input, geometry_hint(io)); }

// Writes text to -o, or stdout when no path was given.
void emit_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

void emit_stream(const std::string& path, const EventStream& stream) {
    if (path.empty() || path == "-") {
        write_csv(stream, std::cout);
        return;
    }
    write_stream_file(stream, path);
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T v{};
        if (!(is >> v) || !is.eof()) throw std::invalid_argument("bad list item '" + item + "'");
        out.push_back(v);
    }
    return out;
}

struct GridOptions {
    std::string preset = "standard";
    std::string explicit_ms;
};

void add_grid_options(CLI::App* app, GridOptions& g) {
    app->add_option("--grid", g.preset, "Interval grid preset: standard (2-400 ms step 2) or coarse")
        ->check(CLI::IsMember({"standard", "coarse"}));
    app->add_option("--grid-ms", g.explicit_ms, "Explicit comma-separated intervals in ms");
}

IntervalGrid make_grid(const GridOptions& g) {
    if (!g.explicit_ms.empty()) {
        std::vector<Timestamp> us;
        for (double ms : parse_list<double>(g.explicit_ms)) us.push_back(Timestamp(ms * 1000.0 + 0.5));
        return IntervalGrid(std::move(us));
    }
    return g.preset == "coarse" ? IntervalGrid::coarse() : IntervalGrid::standard();
}

std::string error_category(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const FormatError*>(&e)) return "format";
    if (dynamic_cast<const LengthError*>(&e)) return "length";
    if (dynamic_cast<const IoError*>(&e)) return "io";
    if (dynamic_cast<const RangeError*>(&e)) return "range";
    if (dynamic_cast<const MissingLabelError*>(&e)) return "missing_label";
    if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency";
    if (dynamic_cast<const DegenerateClassError*>(&e)) return "degenerate_class";
    if (dynamic_cast<const DegenerateInputError*>(&e)) return "degenerate_input";
    if (dynamic_cast<const IncompatibleError*>(&e)) return "incompatible";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "value";
    return "runtime";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Label-free (AOCC) and label-based evaluation of event-camera denoising"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "aocc 1.0.0");

    // synth
    SceneConfig scene;
    std::string scene_name = "bar";
    std::string synth_out;
    double duration_ms = 2000;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic test scene");
    synth->add_option("--scene", scene_name, "bar, grating, checkerboard or edge")
        ->check(CLI::IsMember({"bar", "grating", "checkerboard", "edge"}));
    synth->add_option("--width", scene.geometry.width)->check(CLI::PositiveNumber);
    synth->add_option("--height", scene.geometry.height)->check(CLI::PositiveNumber);
    synth->add_option("--duration-ms", duration_ms)->check(CLI::PositiveNumber);
    synth->add_option("--speed", scene.speed, "px/s (rad/s for edge)")->check(CLI::PositiveNumber);
    synth->add_option("--feature", scene.feature_size, "Bar width / half period / square side")
        ->check(CLI::PositiveNumber);
    synth->add_option("--fire-prob", scene.fire_probability)->check(CLI::Range(0.0, 1.0));
    synth->add_option("--jitter-us", scene.jitter_us);
    synth->add_option("--step-us", scene.step_us)->check(CLI::PositiveNumber);
    synth->add_option("--seed", scene.seed);
    synth->add_option("-o,--output", synth_out, "Output .csv or .bin (default stdout CSV)");

    // inject
    CommonIo inject_io;
    NoiseConfig noise;
    auto* inj = app.add_subcommand("inject", "Add labeled Poisson background noise");
    inj->add_option("-i,--input", inject_io.input)->required();
    inj->add_option("-o,--output", inject_io.output);
    inj->add_option("--width", inject_io.width);
    inj->add_option("--height", inject_io.height);
    inj->add_option("--rate", noise.rate, "Noise rate in Hz per pixel")->required();
    inj->add_option("--seed", noise.seed);
    inj->add_option("--polarity-split", noise.polarity_split)->check(CLI::Range(0.0, 1.0));

    // score
    CommonIo score_io;
    double oracle_sigma = 0.4;
    std::uint64_t oracle_seed = 0;
    auto* score = app.add_subcommand("score", "Synthetic per-event scores from labels (oracle)");
    score->add_option("-i,--input", score_io.input)->required();
    score->add_option("-o,--output", score_io.output);
    score->add_option("--sigma", oracle_sigma)->check(CLI::NonNegativeNumber);
    score->add_option("--seed", oracle_seed);

    // denoise
    CommonIo den_io;
    std::string method = "dwf";
    std::uint32_t radius = 2, buffer = 200, support = 1;
    std::string norm = "chebyshev";
    double tau = 0.5;
    std::string scores_path;
    auto* den = app.add_subcommand("denoise", "Run a baseline denoiser");
    den->add_option("-i,--input", den_io.input)->required();
    den->add_option("-o,--output", den_io.output);
    den->add_option("--width", den_io.width);
    den->add_option("--height", den_io.height);
    den->add_option("--method", method)->check(CLI::IsMember({"dwf", "threshold", "passthrough"}));
    den->add_option("--radius", radius)->check(CLI::PositiveNumber);
    den->add_option("--buffer", buffer)->check(CLI::PositiveNumber);
    den->add_option("--support", support)->check(CLI::PositiveNumber);
    den->add_option("--norm", norm)->check(CLI::IsMember({"chebyshev", "l1"}));
    den->add_option("--tau", tau)->check(CLI::Range(0.0, 1.0));
    den->add_option("--scores", scores_path, "Scores CSV for --method threshold");

    // eval
    CommonIo eval_io;
    std::string kept_path;
    bool eval_labeled = false, eval_esr = false;
    std::optional<double> esr_m;
    double esr_window_ms = 0;
    auto* ev = app.add_subcommand("eval", "Labeled metrics and/or ESR as one CSV row");
    ev->add_option("-i,--input", eval_io.input, "Labeled input (before denoising)")->required();
    ev->add_option("-o,--output", eval_io.output);
    ev->add_option("--width", eval_io.width);
    ev->add_option("--height", eval_io.height);
    ev->add_option("--kept", kept_path, "Denoised stream (default: input, i.e. passthrough)");
    ev->add_flag("--labeled", eval_labeled, "Confusion counts, NeRr, VeRr, SNR, ACC, TPR, FPR");
    ev->add_flag("--esr", eval_esr, "NTSS, LN and ESR of the kept stream");
    ev->add_option("--esr-m", esr_m, "ESR reference event count M (default N)")
        ->check(CLI::PositiveNumber);
    ev->add_option("--esr-window-ms", esr_window_ms, "Average ESR over windows of this length");

    // ccc
    CommonIo ccc_io;
    GridOptions ccc_grid;
    auto* cc = app.add_subcommand("ccc", "Continuous contrast curve and its area");
    cc->add_option("-i,--input", ccc_io.input)->required();
    cc->add_option("-o,--output", ccc_io.output);
    cc->add_option("--width", ccc_io.width);
    cc->add_option("--height", ccc_io.height);
    add_grid_options(cc, ccc_grid);

    // sweep
    CommonIo sw_io;
    GridOptions sw_grid;
    std::string sw_method = "dwf";
    std::string sw_params;
    std::uint32_t sw_buffer = 200, sw_support = 1;
    std::string sw_scores;
    std::optional<double> sw_sigma;
    std::uint64_t sw_seed = 0;
    std::string curves_dir;
    auto* sw = app.add_subcommand("sweep", "AOCC across denoiser parameters");
    sw->add_option("-i,--input", sw_io.input)->required();
    sw->add_option("-o,--output", sw_io.output);
    sw->add_option("--width", sw_io.width);
    sw->add_option("--height", sw_io.height);
    sw->add_option("--method", sw_method)->check(CLI::IsMember({"dwf", "threshold"}));
    sw->add_option("--params", sw_params,
                   "Comma-separated radii (dwf) or thresholds; default 2..14 step 2 / 0.02..0.98 step 0.02");
    sw->add_option("--buffer", sw_buffer)->check(CLI::PositiveNumber);
    sw->add_option("--support", sw_support)->check(CLI::PositiveNumber);
    sw->add_option("--scores", sw_scores, "Scores CSV for --method threshold");
    sw->add_option("--oracle-sigma", sw_sigma, "Use oracle scores instead of --scores");
    sw->add_option("--seed", sw_seed, "Oracle score seed");
    sw->add_option("--curves-dir", curves_dir, "Also write one curve CSV per parameter here");
    add_grid_options(sw, sw_grid);

    // roc
    CommonIo roc_io;
    std::string roc_scores;
    std::string roc_thresholds = "default";
    auto* rc = app.add_subcommand("roc", "ROC curve and AUC of a scored, labeled stream");
    rc->add_option("-i,--input", roc_io.input)->required();
    rc->add_option("-o,--output", roc_io.output);
    rc->add_option("--width", roc_io.width);
    rc->add_option("--height", roc_io.height);
    rc->add_option("--scores", roc_scores)->required();
    rc->add_option("--thresholds", roc_thresholds,
                   "default (0.02..0.98), exact (every distinct score) or a comma list");

    // plot
    std::vector<std::string> plot_inputs;
    std::vector<std::string> plot_labels;
    std::string plot_out;
    PlotOptions plot_opts;
    auto* pl = app.add_subcommand("plot", "Render curve, sweep or ROC CSVs to SVG");
    pl->add_option("-i,--input", plot_inputs)->required();
    pl->add_option("-o,--output", plot_out);
    pl->add_option("--label", plot_labels, "Legend entry per input");
    pl->add_option("--title", plot_opts.title);
    pl->add_option("--xlabel", plot_opts.x_label);
    pl->add_option("--ylabel", plot_opts.y_label);
    pl->add_option("--size-x", plot_opts.width)->check(CLI::Range(100, 10000));
    pl->add_option("--size-y", plot_opts.height)->check(CLI::Range(100, 10000));

    // frame
    CommonIo fr_io;
    double fr_t0_ms = 0, fr_t1_ms = 0;
    auto* fr = app.add_subcommand("frame", "Export one event frame as PGM and print its contrast");
    fr->add_option("-i,--input", fr_io.input)->required();
    fr->add_option("-o,--output", fr_io.output)->required();
    fr->add_option("--width", fr_io.width);
    fr->add_option("--height", fr_io.height);
    fr->add_option("--t0-ms", fr_t0_ms)->required();
    fr->add_option("--t1-ms", fr_t1_ms)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: category=usage message=" << e.what() << "\n";
        return 2;
    }

    try {
        if (*synth) {
            scene.kind = parse_scene_kind(scene_name);
            scene.duration_us = Timestamp(duration_ms * 1000.0 + 0.5);
            emit_stream(synth_out, synthesize(scene));
        } else if (*inj) {
            emit_stream(inject_io.output, inject(load(inject_io), noise));
        } else if (*score) {
            ScoredStream scored = oracle_scores(load(score_io), oracle_sigma, oracle_seed);
            std::ostringstream out;
            write_scores_csv(scored.scores, out);
            emit_text(score_io.output, out.str());
        } else if (*den) {
            EventStream in = load(den_io);
            DenoiserConfig cfg;
            std::vector<double> scores;
            if (method == "dwf") {
                cfg = DenoiserConfig::dwf(radius, buffer, support);
                cfg.dwf_norm = norm == "l1" ? DistanceNorm::Manhattan : DistanceNorm::Chebyshev;
            } else if (method == "threshold") {
                if (scores_path.empty()) {
                    std::cerr << "error: category=usage message=--method threshold needs --scores\n";
                    return 2;
                }
                cfg = DenoiserConfig::score_threshold(tau);
                scores = read_scores_file(scores_path);
            }
            emit_stream(den_io.output, denoise(in, cfg, scores));
        } else if (*ev) {
            if (!eval_labeled && !eval_esr) {
                std::cerr << "error: category=usage message=eval needs --labeled and/or --esr\n";
                return 2;
            }
            EventStream input = load(eval_io);
            EventStream kept = kept_path.empty() ? input : read_stream_file(kept_path, geometry_hint(eval_io));
            std::optional<MetricsReport> metrics;
            std::optional<EsrResult> esr_result;
            if (eval_labeled) metrics = report(confusion(input, kept));
            if (eval_esr) {
                esr_result = esr_window_ms > 0
                                 ? esr_windowed(kept, Timestamp(esr_window_ms * 1000.0 + 0.5), esr_m)
                                 : esr(count_image(kept), esr_m);
            }
            EvalRow row{metrics ? &*metrics : nullptr, esr_result ? &*esr_result : nullptr};
            std::ostringstream out;
            write_eval_csv(row, out);
            emit_text(eval_io.output, out.str());
        } else if (*cc) {
            EventStream in = load(ccc_io);
            AoccResult r = evaluate_aocc(in, make_grid(ccc_grid));
            std::ostringstream out;
            write_curve_csv(r, in.duration(), out);
            emit_text(ccc_io.output, out.str());
        } else if (*sw) {
            EventStream in = load(sw_io);
            IntervalGrid grid = make_grid(sw_grid);
            std::vector<std::pair<double, EventStream>> runs;
            if (sw_method == "dwf") {
                std::vector<std::uint32_t> radii = sw_params.empty()
                                                       ? default_dwf_radius_grid()
                                                       : parse_list<std::uint32_t>(sw_params);
                std::vector<EventStream> outs(radii.size());
                parallel_for(radii.size(), [&](std::size_t k) {
                    outs[k] = dwf_denoise(in, DenoiserConfig::dwf(radii[k], sw_buffer, sw_support));
                });
                for (std::size_t k = 0; k < radii.size(); ++k) runs.emplace_back(radii[k], std::move(outs[k]));
            } else {
                std::vector<double> taus =
                    sw_params.empty() ? default_threshold_grid() : parse_list<double>(sw_params);
                std::vector<double> scores;
                if (sw_sigma) {
                    scores = oracle_scores(in, *sw_sigma, sw_seed).scores;
                } else if (!sw_scores.empty()) {
                    scores = read_scores_file(sw_scores);
                } else {
                    std::cerr << "error: category=usage message=threshold sweep needs --scores or --oracle-sigma\n";
                    return 2;
                }
                ScoredStream scored(in, std::move(scores));
                for (double t : taus) runs.emplace_back(t, threshold_denoise(scored, t));
            }
            SweepResult result = sweep(runs, grid);
            std::ostringstream out;
            write_sweep_csv(result, sw_method == "dwf" ? "radius" : "threshold", in.duration(), out);
            emit_text(sw_io.output, out.str());
            if (!curves_dir.empty()) {
                std::filesystem::create_directories(curves_dir);
                for (std::size_t k = 0; k < result.entries.size(); ++k) {
                    std::ostringstream curve;
                    write_curve_csv(result.entries[k].result, runs[k].second.duration(), curve);
                    emit_text((std::filesystem::path(curves_dir) /
                               ("curve_" + format_double(result.entries[k].parameter) + ".csv"))
                                  .string(),
                              curve.str());
                }
            }
        } else if (*rc) {
            EventStream in = load(roc_io);
            ScoredStream scored(in, read_scores_file(roc_scores));
            std::vector<double> thresholds;
            if (roc_thresholds == "default") {
                thresholds = default_threshold_grid();
            } else if (roc_thresholds == "exact") {
                thresholds = scored.scores;
                std::sort(thresholds.begin(), thresholds.end());
                thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
            } else {
                thresholds = parse_list<double>(roc_thresholds);
            }
            std::ostringstream out;
            write_roc_csv(roc(scored, thresholds), out);
            emit_text(roc_io.output, out.str());
        } else if (*pl) {
            std::vector<Series> series;
            for (std::size_t k = 0; k < plot_inputs.size(); ++k) {
                series.push_back(load_series_csv(plot_inputs[k], plot_opts));
                if (k < plot_labels.size()) series.back().label = plot_labels[k];
            }
            emit_text(plot_out, render_svg(series, plot_opts));
        } else if (*fr) {
            EventStream in = load(fr_io);
            EventFrame frame = accumulate_frame(in, Timestamp(fr_t0_ms * 1000.0 + 0.5),
                                                Timestamp(fr_t1_ms * 1000.0 + 0.5));
            std::ofstream out(fr_io.output, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cannot open '" + fr_io.output + "' for writing");
            write_pgm(frame, out);
            std::cout << "contrast," << format_double(contrast(frame)) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: category=" << error_category(e) << " message=" << e.what() << "\n";
        return 1;
    }
    return 0;
}
