#include "spikegate/spike_train.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>
#include <system_error>

namespace spikegate {

SpikeTrain::SpikeTrain(std::vector<SpikeEvent> events) {
    std::map<TimeStep, double> by_tick;
    for (const auto& ev : events) {
        if (ev.time < 0) {
            throw std::invalid_argument("spike time must be non-negative");
        }
        if (!std::isfinite(ev.amplitude)) {
            throw std::invalid_argument("spike amplitude must be finite");
        }
        by_tick[ev.time] += ev.amplitude;
    }
    events_.reserve(by_tick.size());
    for (const auto& [t, a] : by_tick) {
        if (a != 0.0) {
            events_.push_back({t, a});
        }
    }
}

double SpikeTrain::amplitude_at(TimeStep t) const {
    auto it = std::lower_bound(
        events_.begin(), events_.end(), t,
        [](const SpikeEvent& ev, TimeStep tick) { return ev.time < tick; });
    return (it != events_.end() && it->time == t) ? it->amplitude : 0.0;
}

TimeStep SpikeTrain::last_time() const {
    return events_.empty() ? -1 : events_.back().time;
}

SpikeTrain merge(const std::vector<std::pair<double, SpikeTrain>>& trains) {
    std::vector<SpikeEvent> all;
    for (const auto& [weight, train] : trains) {
        for (const auto& ev : train.events()) {
            all.push_back({ev.time, weight * ev.amplitude});
        }
    }
    return SpikeTrain(std::move(all));
}

double l1_norm(const SpikeTrain& train) {
    double sum = 0.0;
    for (const auto& ev : train.events()) {
        sum += std::abs(ev.amplitude);
    }
    return sum;
}

double signed_sum(const SpikeTrain& train) {
    double sum = 0.0;
    for (const auto& ev : train.events()) {
        sum += ev.amplitude;
    }
    return sum;
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string out(buf, res.ptr);
    // Integral doubles render as "2.0", not "2".
    if (out.find_first_not_of("-0123456789") == std::string::npos) {
        out += ".0";
    }
    return out;
}

std::string format_train(const SpikeTrain& train) {
    std::string out;
    for (const auto& ev : train.events()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(ev.time);
        out += ':';
        out += format_double(ev.amplitude);
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& token, const char* what) {
    throw std::invalid_argument("bad spike token '" + token + "': " + what);
}

SpikeEvent parse_event(const std::string& token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
        parse_fail(token, "expected t:amplitude");
    }
    SpikeEvent ev;
    const char* tb = token.data();
    auto tr = std::from_chars(tb, tb + colon, ev.time);
    if (tr.ec != std::errc{} || tr.ptr != tb + colon || ev.time < 0) {
        parse_fail(token, "bad time");
    }
    const char* ab = tb + colon + 1;
    const char* ae = tb + token.size();
    auto ar = std::from_chars(ab, ae, ev.amplitude);
    if (ar.ec != std::errc{} || ar.ptr != ae || !std::isfinite(ev.amplitude)) {
        parse_fail(token, "bad amplitude");
    }
    return ev;
}

}  // namespace

SpikeTrain parse_train(const std::string& text) {
    std::vector<SpikeEvent> events;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        events.push_back(parse_event(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return SpikeTrain(std::move(events));
}

}  // namespace spikegate
