// Python bindings: event streams round-trip through numpy arrays; results come
// back as plain dicts and arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aocc/aocc.hpp"

namespace py = pybind11;
using namespace aocc;

namespace {

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v) {
    py::array_t<T> out(py::ssize_t(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

template <typename T, typename F>
py::array_t<T> column(const EventStream& s, F get) {
    py::array_t<T> out(py::ssize_t(s.size()));
    auto* d = out.mutable_data();
    for (std::size_t i = 0; i < s.size(); ++i) d[i] = get(s[i]);
    return out;
}

using U64 = py::array_t<std::uint64_t, py::array::c_style | py::array::forcecast>;
using U16 = py::array_t<std::uint16_t, py::array::c_style | py::array::forcecast>;
using I8 = py::array_t<std::int8_t, py::array::c_style | py::array::forcecast>;
using F64 = py::array_t<double, py::array::c_style | py::array::forcecast>;

EventStream from_arrays(U64 t, U16 x, U16 y, I8 p, std::uint32_t width, std::uint32_t height,
                        std::optional<I8> label, std::optional<Timestamp> t_start,
                        std::optional<Timestamp> t_end) {
    const auto n = std::size_t(t.size());
    if (std::size_t(x.size()) != n || std::size_t(y.size()) != n || std::size_t(p.size()) != n ||
        (label && std::size_t(label->size()) != n)) {
        throw std::invalid_argument("t, x, y, p (and label) must have equal length");
    }
    std::vector<Event> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = {t.data()[i], x.data()[i], y.data()[i], p.data()[i]};
    std::optional<std::vector<Label>> lb;
    if (label) {
        lb.emplace(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto v = label->data()[i];
            if (v != 0 && v != 1) throw std::invalid_argument("labels must be 0 (noise) or 1 (signal)");
            (*lb)[i] = Label(v);
        }
    }
    auto s = EventStream::with_inferred_bounds({width, height}, std::move(ev), std::move(lb));
    if (t_start || t_end) s = s.with_bounds(t_start.value_or(s.t_start()), t_end.value_or(s.t_end()));
    require_valid(s);
    return s;
}

IntervalGrid grid_from(std::optional<std::vector<Timestamp>> grid_us, const std::string& preset) {
    if (grid_us) return IntervalGrid(*grid_us);
    if (preset == "standard") return IntervalGrid::standard();
    if (preset == "coarse") return IntervalGrid::coarse();
    throw std::invalid_argument("grid preset must be 'standard' or 'coarse'");
}

py::dict result_dict(const AoccResult& r) {
    std::vector<double> dt, c;
    for (const auto& pt : r.curve.points) {
        dt.push_back(double(pt.dt));
        c.push_back(pt.c_avg);
    }
    py::dict d;
    d["aocc_sum"] = r.aocc_sum;
    d["aocc_trapezoid"] = r.aocc_trapezoid;
    d["dt_us"] = to_array(dt);
    d["c_avg"] = to_array(c);
    return d;
}

py::dict report_dict(const MetricsReport& r) {
    py::dict d;
    d["tp"] = r.counts.tp;
    d["tn"] = r.counts.tn;
    d["fp"] = r.counts.fp;
    d["fn"] = r.counts.fn;
    d["nerr"] = r.nerr;
    d["verr"] = r.verr;
    d["snr_db"] = r.snr_db;
    d["acc"] = r.acc;
    d["tpr"] = r.tpr;
    d["fpr"] = r.fpr;
    return d;
}

py::dict esr_dict(const EsrResult& r) {
    py::dict d;
    d["ntss"] = r.ntss;
    d["ln"] = r.ln;
    d["esr"] = r.esr;
    d["m"] = r.m;
    return d;
}

EventFrame frame_from(py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> img) {
    if (img.ndim() != 2) throw std::invalid_argument("frame must be a 2-D array");
    EventFrame f({std::uint32_t(img.shape(1)), std::uint32_t(img.shape(0))}, 0, 1);
    for (std::size_t i = 0; i < f.occupancy.size(); ++i) f.occupancy[i] = img.data()[i] ? kPixelOn : 0;
    return f;
}

}  // namespace

PYBIND11_MODULE(_aocc, m) {
    m.doc() = "Event-camera denoising evaluation: AOCC, labeled metrics, ESR, noise and baselines.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<LengthError>(m, "LengthError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<EventStream>(m, "EventStream")
        .def(py::init(&from_arrays), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("p"),
             py::arg("width"), py::arg("height"), py::arg("label") = py::none(),
             py::arg("t_start") = py::none(), py::arg("t_end") = py::none(),
             "Builds a validated stream; bounds default to [first t, last t + 1].")
        .def_property_readonly("t", [](const EventStream& s) { return column<std::uint64_t>(s, [](const Event& e) { return e.t; }); })
        .def_property_readonly("x", [](const EventStream& s) { return column<std::uint16_t>(s, [](const Event& e) { return e.x; }); })
        .def_property_readonly("y", [](const EventStream& s) { return column<std::uint16_t>(s, [](const Event& e) { return e.y; }); })
        .def_property_readonly("p", [](const EventStream& s) { return column<std::int8_t>(s, [](const Event& e) { return e.p; }); })
        .def_property_readonly("label",
                               [](const EventStream& s) -> py::object {
                                   if (!s.labeled()) return py::none();
                                   py::array_t<std::int8_t> out(py::ssize_t(s.size()));
                                   for (std::size_t i = 0; i < s.size(); ++i)
                                       out.mutable_data()[i] = std::int8_t(s.labels()[i]);
                                   return std::move(out);
                               })
        .def_property_readonly("width", [](const EventStream& s) { return s.geometry().width; })
        .def_property_readonly("height", [](const EventStream& s) { return s.geometry().height; })
        .def_property_readonly("t_start", &EventStream::t_start)
        .def_property_readonly("t_end", &EventStream::t_end)
        .def_property_readonly("labeled", &EventStream::labeled)
        .def("__len__", &EventStream::size)
        .def("__eq__", [](const EventStream& a, const EventStream& b) { return a == b; })
        .def("__repr__", [](const EventStream& s) {
            return "<EventStream " + std::to_string(s.size()) + " events " +
                   std::to_string(s.geometry().width) + "x" + std::to_string(s.geometry().height) +
                   " [" + std::to_string(s.t_start()) + ", " + std::to_string(s.t_end()) + "]" +
                   (s.labeled() ? " labeled>" : ">");
        });

    m.def("read_stream", [](const std::string& path) { return read_stream_file(path); }, py::arg("path"));
    m.def("write_stream", &write_stream_file, py::arg("stream"), py::arg("path"),
          "CSV, or binary when the path ends in .bin.");

    m.def(
        "synthesize",
        [](const std::string& scene, std::uint32_t width, std::uint32_t height, double duration_ms,
           double speed, std::uint32_t feature, double fire_prob, Timestamp jitter_us, Timestamp step_us,
           std::uint64_t seed) {
            SceneConfig c;
            c.kind = parse_scene_kind(scene);
            c.geometry = {width, height};
            c.duration_us = Timestamp(duration_ms * 1000.0 + 0.5);
            c.speed = speed;
            c.feature_size = feature;
            c.fire_probability = fire_prob;
            c.jitter_us = jitter_us;
            c.step_us = step_us;
            c.seed = seed;
            return synthesize(c);
        },
        py::arg("scene") = "bar", py::arg("width") = 64, py::arg("height") = 64,
        py::arg("duration_ms") = 2000.0, py::arg("speed") = 64.0, py::arg("feature") = 8,
        py::arg("fire_prob") = 0.9, py::arg("jitter_us") = 1000, py::arg("step_us") = 100,
        py::arg("seed") = 1);

    m.def(
        "inject",
        [](const EventStream& s, double rate, std::uint64_t seed, double split) {
            return inject(s, {rate, seed, split});
        },
        py::arg("stream"), py::arg("rate"), py::arg("seed") = 0, py::arg("polarity_split") = 0.5);

    m.def(
        "dwf_denoise",
        [](const EventStream& s, std::uint32_t radius, std::uint32_t buffer, std::uint32_t support,
           const std::string& norm) {
            auto cfg = DenoiserConfig::dwf(radius, buffer, support);
            if (norm == "l1") cfg.dwf_norm = DistanceNorm::Manhattan;
            else if (norm != "chebyshev") throw std::invalid_argument("norm must be 'chebyshev' or 'l1'");
            return dwf_denoise(s, cfg);
        },
        py::arg("stream"), py::arg("radius") = 2, py::arg("buffer") = 200, py::arg("support") = 1,
        py::arg("norm") = "chebyshev");

    m.def(
        "threshold_denoise",
        [](const EventStream& s, F64 scores, double tau) {
            return threshold_denoise(ScoredStream(s, {scores.data(), scores.data() + scores.size()}), tau);
        },
        py::arg("stream"), py::arg("scores"), py::arg("tau"));

    m.def(
        "oracle_scores",
        [](const EventStream& s, double sigma, std::uint64_t seed) {
            return to_array(oracle_scores(s, sigma, seed).scores);
        },
        py::arg("stream"), py::arg("sigma") = 0.4, py::arg("seed") = 0);

    m.def(
        "frame",
        [](const EventStream& s, Timestamp t0, Timestamp t1) {
            auto f = accumulate_frame(s, t0, t1);
            py::array_t<std::uint8_t> out({py::ssize_t(f.geometry.height), py::ssize_t(f.geometry.width)});
            std::copy(f.occupancy.begin(), f.occupancy.end(), out.mutable_data());
            return out;
        },
        py::arg("stream"), py::arg("t0"), py::arg("t1"), "Binary frame (0/255) of events in [t0, t1).");

    m.def("contrast", [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> img) {
        return contrast(frame_from(img));
    }, py::arg("frame"), "Sobel-magnitude sample std of a frame; nonzero pixels count as on.");

    m.def("average_contrast", &average_contrast, py::arg("stream"), py::arg("dt_us"));

    m.def(
        "aocc",
        [](const EventStream& s, std::optional<std::vector<Timestamp>> grid_us, const std::string& preset) {
            return result_dict(evaluate_aocc(s, grid_from(grid_us, preset)));
        },
        py::arg("stream"), py::arg("grid_us") = py::none(), py::arg("preset") = "standard",
        "Contrast curve and its area; returns aocc_sum, aocc_trapezoid, dt_us, c_avg.");

    m.def("standard_grid", [] { return IntervalGrid::standard().intervals(); });
    m.def("coarse_grid", [] { return IntervalGrid::coarse().intervals(); });

    m.def("confusion", [](const EventStream& in, const EventStream& kept) {
        return report_dict(report(confusion(in, kept)));
    }, py::arg("input"), py::arg("kept"), "Confusion counts and derived rates.");

    m.def("report", [](std::uint64_t tp, std::uint64_t tn, std::uint64_t fp, std::uint64_t fn) {
        return report_dict(report({tp, tn, fp, fn}));
    }, py::arg("tp"), py::arg("tn"), py::arg("fp"), py::arg("fn"));

    m.def(
        "roc",
        [](const EventStream& s, F64 scores, std::optional<std::vector<double>> thresholds) {
            auto th = thresholds ? *thresholds : default_threshold_grid();
            auto c = roc(ScoredStream(s, {scores.data(), scores.data() + scores.size()}), th);
            std::vector<double> f, t, h;
            for (const auto& p : c.points) {
                f.push_back(p.fpr);
                t.push_back(p.tpr);
                h.push_back(p.threshold);
            }
            py::dict d;
            d["fpr"] = to_array(f);
            d["tpr"] = to_array(t);
            d["threshold"] = to_array(h);
            d["auc"] = c.auc;
            return d;
        },
        py::arg("stream"), py::arg("scores"), py::arg("thresholds") = py::none());

    m.def(
        "esr",
        [](const EventStream& s, std::optional<double> m_ref, std::optional<double> window_ms) {
            if (window_ms) return esr_dict(esr_windowed(s, Timestamp(*window_ms * 1000.0 + 0.5), m_ref));
            return esr_dict(esr(count_image(s), m_ref));
        },
        py::arg("stream"), py::arg("m") = py::none(), py::arg("window_ms") = py::none());
}
