#include "aocc/event_core.hpp"

#include <algorithm>
#include <sstream>

namespace aocc {

EventStream::EventStream(SensorGeometry geometry, std::vector<Event> events, Timestamp t_start,
                         Timestamp t_end)
    : geometry_(geometry), events_(std::move(events)), t_start_(t_start), t_end_(t_end) {}

EventStream::EventStream(SensorGeometry geometry, std::vector<Event> events, Timestamp t_start,
                         Timestamp t_end, std::vector<Label> labels)
    : geometry_(geometry),
      events_(std::move(events)),
      labels_(std::move(labels)),
      t_start_(t_start),
      t_end_(t_end),
      labeled_(true) {}

EventStream EventStream::with_inferred_bounds(SensorGeometry geometry, std::vector<Event> events,
                                              std::optional<std::vector<Label>> labels) {
    Timestamp t0 = 0;
    Timestamp t1 = 0;
    if (!events.empty()) {
        t0 = events.front().t;
        t1 = events.back().t + 1;
    }
    if (labels) {
        return EventStream(geometry, std::move(events), t0, t1, std::move(*labels));
    }
    return EventStream(geometry, std::move(events), t0, t1);
}

Label EventStream::label(std::size_t i) const {
    if (!labeled_) {
        throw MissingLabelError("event stream carries no labels");
    }
    return labels_.at(i);
}

std::size_t EventStream::lower_index(Timestamp time) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), time,
                               [](const Event& e, Timestamp v) { return e.t < v; });
    return std::size_t(it - events_.begin());
}

std::size_t EventStream::upper_index(Timestamp time) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), time,
                               [](Timestamp v, const Event& e) { return v < e.t; });
    return std::size_t(it - events_.begin());
}

EventStream EventStream::with_uniform_label(Label label) const {
    return EventStream(geometry_, events_, t_start_, t_end_,
                       std::vector<Label>(events_.size(), label));
}

EventStream EventStream::without_labels() const {
    return EventStream(geometry_, events_, t_start_, t_end_);
}

EventStream EventStream::with_bounds(Timestamp t_start, Timestamp t_end) const {
    EventStream out = *this;
    out.t_start_ = t_start;
    out.t_end_ = t_end;
    return out;
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::Ordering: return "ordering";
        case Violation::Kind::Bounds: return "bounds";
        case Violation::Kind::Polarity: return "polarity";
        case Violation::Kind::Window: return "window";
        case Violation::Kind::Geometry: return "geometry";
        case Violation::Kind::LabelCount: return "label_count";
    }
    return "unknown";
}

std::vector<Violation> validate(const EventStream& stream) {
    std::vector<Violation> out;
    const auto& g = stream.geometry();
    if (g.width == 0 || g.height == 0) {
        out.push_back({Violation::Kind::Geometry, 0, "sensor geometry has zero pixels"});
    }
    if (stream.t_end() < stream.t_start()) {
        out.push_back({Violation::Kind::Window, 0, "t_end precedes t_start"});
    }
    if (stream.labeled() && stream.labels().size() != stream.size()) {
        std::ostringstream msg;
        msg << stream.labels().size() << " labels for " << stream.size() << " events";
        out.push_back({Violation::Kind::LabelCount, 0, msg.str()});
    }

    auto events = stream.events();
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e = events[i];
        if (i > 0 && e.t < events[i - 1].t) {
            std::ostringstream msg;
            msg << "event " << i << " at t=" << e.t << " precedes t=" << events[i - 1].t;
            out.push_back({Violation::Kind::Ordering, i, msg.str()});
        }
        if (!g.contains(e.x, e.y)) {
            std::ostringstream msg;
            msg << "event " << i << " at (" << e.x << ", " << e.y << ") outside " << g.width
                << "x" << g.height;
            out.push_back({Violation::Kind::Bounds, i, msg.str()});
        }
        if (e.p != 1 && e.p != -1) {
            std::ostringstream msg;
            msg << "event " << i << " has polarity " << int(e.p);
            out.push_back({Violation::Kind::Polarity, i, msg.str()});
        }
    }
    if (!events.empty()) {
        if (events.front().t < stream.t_start()) {
            out.push_back({Violation::Kind::Window, 0, "first event precedes t_start"});
        }
        if (events.back().t > stream.t_end()) {
            out.push_back({Violation::Kind::Window, events.size() - 1, "last event follows t_end"});
        }
    }
    return out;
}

void require_valid(const EventStream& stream) {
    auto report = validate(stream);
    if (!report.empty()) {
        throw std::invalid_argument("invalid event stream (" + to_string(report.front().kind) +
                                    "): " + report.front().message);
    }
}

namespace {

EventStream copy_range(const EventStream& stream, std::size_t begin, std::size_t end,
                       Timestamp t0, Timestamp t1) {
    auto events = stream.events();
    std::vector<Event> ev(events.begin() + begin, events.begin() + end);
    if (stream.labeled()) {
        auto labels = stream.labels();
        std::vector<Label> lb(labels.begin() + begin, labels.begin() + end);
        return EventStream(stream.geometry(), std::move(ev), t0, t1, std::move(lb));
    }
    return EventStream(stream.geometry(), std::move(ev), t0, t1);
}

void check_interval(const EventStream& stream, Timestamp t0, Timestamp t1) {
    if (t0 > t1 || t0 < stream.t_start() || t1 > stream.t_end()) {
        std::ostringstream msg;
        msg << "interval [" << t0 << ", " << t1 << "] outside recording window ["
            << stream.t_start() << ", " << stream.t_end() << "]";
        throw RangeError(msg.str());
    }
}

}  // namespace

EventStream slice(const EventStream& stream, Timestamp t0, Timestamp t1) {
    check_interval(stream, t0, t1);
    return copy_range(stream, stream.lower_index(t0), stream.upper_index(t1), t0, t1);
}

EventStream window(const EventStream& stream, Timestamp t0, Timestamp t1) {
    check_interval(stream, t0, t1);
    return copy_range(stream, stream.lower_index(t0), stream.lower_index(t1), t0, t1);
}

EventStream merge(const EventStream& a, const EventStream& b) {
    if (!(a.geometry() == b.geometry())) {
        throw IncompatibleError("cannot merge streams with different sensor geometry");
    }
    const bool labeled = a.labeled() && b.labeled();
    std::vector<Event> events;
    std::vector<Label> labels;
    events.reserve(a.size() + b.size());
    if (labeled) labels.reserve(a.size() + b.size());

    std::size_t i = 0;
    std::size_t j = 0;
    auto take = [&](const EventStream& s, std::size_t& k) {
        events.push_back(s[k]);
        if (labeled) labels.push_back(s.labels()[k]);
        ++k;
    };
    while (i < a.size() && j < b.size()) {
        if (b[j].t < a[i].t) {
            take(b, j);
        } else {
            take(a, i);
        }
    }
    while (i < a.size()) take(a, i);
    while (j < b.size()) take(b, j);

    Timestamp t0 = std::min(a.t_start(), b.t_start());
    Timestamp t1 = std::max(a.t_end(), b.t_end());
    if (a.empty() && a.t_start() == 0 && a.t_end() == 0) {
        t0 = b.t_start();
        t1 = b.t_end();
    } else if (b.empty() && b.t_start() == 0 && b.t_end() == 0) {
        t0 = a.t_start();
        t1 = a.t_end();
    }
    if (labeled) {
        return EventStream(a.geometry(), std::move(events), t0, t1, std::move(labels));
    }
    return EventStream(a.geometry(), std::move(events), t0, t1);
}

EventStream select(const EventStream& stream, const std::vector<bool>& keep) {
    if (keep.size() != stream.size()) {
        throw std::invalid_argument("selection mask length does not match event count");
    }
    std::vector<Event> events;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        if (!keep[i]) continue;
        events.push_back(stream[i]);
        if (stream.labeled()) labels.push_back(stream.labels()[i]);
    }
    if (stream.labeled()) {
        return EventStream(stream.geometry(), std::move(events), stream.t_start(), stream.t_end(),
                           std::move(labels));
    }
    return EventStream(stream.geometry(), std::move(events), stream.t_start(), stream.t_end());
}

}  // namespace aocc
