// Discrete-time spike trains: the signal type every other module trades in.
//
// One tick equals the unit time step. A train holds at most one event per
// tick; simultaneous contributions are summed at construction and events
// whose amplitude sums to exactly zero are dropped.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spikegate {

using TimeStep = std::int64_t;  // non-negative simulation tick

struct SpikeEvent {
    TimeStep time = 0;
    double amplitude = 0.0;  // signed, units of potential, never 0 when stored

    friend bool operator==(const SpikeEvent&, const SpikeEvent&) = default;
};

class SpikeTrain {
public:
    SpikeTrain() = default;

    // Normalizes arbitrary events: sorts by time, sums simultaneous
    // contributions, drops exact-zero amplitudes. Throws
    // std::invalid_argument on negative times or non-finite amplitudes.
    explicit SpikeTrain(std::vector<SpikeEvent> events);

    const std::vector<SpikeEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }
    std::size_t size() const { return events_.size(); }

    // Amplitude at a tick, 0 when no event is stored there.
    double amplitude_at(TimeStep t) const;

    TimeStep last_time() const;  // -1 for the empty train

    friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

private:
    std::vector<SpikeEvent> events_;  // strictly increasing in time
};

// Weighted superposition of presynaptic trains. Ticks whose weighted sum
// is exactly zero are dropped.
SpikeTrain merge(const std::vector<std::pair<double, SpikeTrain>>& trains);

// Sum of absolute amplitudes; 0 for the empty train.
double l1_norm(const SpikeTrain& train);

// Sum of signed amplitudes; 0 for the empty train.
double signed_sum(const SpikeTrain& train);

// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);

// Text form `t:a,t:a,...` (empty string for the empty train). Amplitudes
// use the shortest round-trippable decimal form, so parse(format(x)) == x.
std::string format_train(const SpikeTrain& train);

// Parses the text form. Throws std::invalid_argument naming the offending
// token on malformed input.
SpikeTrain parse_train(const std::string& text);

}  // namespace spikegate
