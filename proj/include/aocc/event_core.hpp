#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aocc {

using Timestamp = std::uint64_t;  // microseconds

struct Event {
    Timestamp t = 0;
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::int8_t p = 1;

    friend bool operator==(const Event&, const Event&) = default;
};

enum class Label : std::int8_t { Noise = 0, Signal = 1 };

struct LabeledEvent {
    Event event;
    Label label = Label::Signal;

    friend bool operator==(const LabeledEvent&, const LabeledEvent&) = default;
};

struct SensorGeometry {
    std::uint32_t width = 346;
    std::uint32_t height = 260;

    std::size_t pixel_count() const { return std::size_t(width) * height; }
    bool contains(std::uint32_t x, std::uint32_t y) const { return x < width && y < height; }

    friend bool operator==(const SensorGeometry&, const SensorGeometry&) = default;
};

/// DAVIS346 resolution.
inline constexpr SensorGeometry kDavis346{346, 260};

/// Thrown when an interval falls outside a stream's recording window.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown when two streams cannot be combined.
class IncompatibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation needs labels the stream does not carry.
class MissingLabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Time-ordered event recording bound to a sensor geometry.
///
/// Events and labels are stored as parallel arrays. An unlabeled stream has an
/// empty label array; a labeled one has exactly one label per event. The
/// recording window [t_start, t_end] may extend past the first and last event.
/// Construction does not validate; call validate() for a violation report.
class EventStream {
public:
    EventStream() = default;
    /// Unlabeled stream.
    EventStream(SensorGeometry geometry, std::vector<Event> events, Timestamp t_start,
                Timestamp t_end);
    /// Labeled stream, even when empty.
    EventStream(SensorGeometry geometry, std::vector<Event> events, Timestamp t_start,
                Timestamp t_end, std::vector<Label> labels);

    /// Bounds taken from the first and last event (t_end = last + 1), or [0, 0] when empty.
    static EventStream with_inferred_bounds(SensorGeometry geometry, std::vector<Event> events,
                                            std::optional<std::vector<Label>> labels = {});

    const SensorGeometry& geometry() const { return geometry_; }
    std::span<const Event> events() const { return events_; }
    std::span<const Label> labels() const { return labels_; }
    Timestamp t_start() const { return t_start_; }
    Timestamp t_end() const { return t_end_; }
    Timestamp duration() const { return t_end_ >= t_start_ ? t_end_ - t_start_ : 0; }

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    bool labeled() const { return labeled_; }

    const Event& operator[](std::size_t i) const { return events_[i]; }
    Label label(std::size_t i) const;
    LabeledEvent labeled_event(std::size_t i) const { return {events_[i], label(i)}; }

    /// Index of the first event with t >= time.
    std::size_t lower_index(Timestamp time) const;
    /// Index of the first event with t > time.
    std::size_t upper_index(Timestamp time) const;

    /// Same events, every one tagged with `label`.
    EventStream with_uniform_label(Label label) const;
    /// Same events with the labels dropped.
    EventStream without_labels() const;
    /// Same events and labels with a different recording window.
    EventStream with_bounds(Timestamp t_start, Timestamp t_end) const;

    friend bool operator==(const EventStream&, const EventStream&) = default;

private:
    SensorGeometry geometry_{};
    std::vector<Event> events_;
    std::vector<Label> labels_;
    Timestamp t_start_ = 0;
    Timestamp t_end_ = 0;
    bool labeled_ = false;
};

struct Violation {
    enum class Kind { Ordering, Bounds, Polarity, Window, Geometry, LabelCount };
    Kind kind;
    std::size_t index = 0;  // offending event, 0 for stream-level violations
    std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every invariant violation of `stream`; empty when the stream is well formed.
std::vector<Violation> validate(const EventStream& stream);

/// Throws std::invalid_argument describing the first violation, if any.
void require_valid(const EventStream& stream);

/// Events with t0 <= t <= t1. Requires t_start <= t0 <= t1 <= t_end.
EventStream slice(const EventStream& stream, Timestamp t0, Timestamp t1);

/// Events with t0 <= t < t1, the convention used to partition a stream into
/// consecutive windows. The result's bounds are [t0, t1].
EventStream window(const EventStream& stream, Timestamp t0, Timestamp t1);

/// Stable time-ordered merge; on equal timestamps events of `a` come first.
/// The result is labeled only if both inputs are.
EventStream merge(const EventStream& a, const EventStream& b);

/// Keeps the events whose mask entry is true.
EventStream select(const EventStream& stream, const std::vector<bool>& keep);

}  // namespace aocc
