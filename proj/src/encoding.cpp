#include "spikegate/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace spikegate {

std::string GatePartition::class_a_label() const {
    std::string out = "{";
    for (std::size_t i = 0; i < class_a.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += "(" + std::to_string(class_a[i].b1) + "," +
               std::to_string(class_a[i].b2) + ")";
    }
    return out + "}";
}

const std::vector<GatePartition>& all_gates() {
    static const std::vector<GatePartition> gates = [] {
        auto complement = [](const std::vector<InputPattern>& side) {
            std::vector<InputPattern> rest;
            for (const auto& p : kAllPatterns) {
                if (std::find(side.begin(), side.end(), p) == side.end()) {
                    rest.push_back(p);
                }
            }
            return rest;
        };
        const std::vector<std::vector<InputPattern>> sides = {
            {{0, 0}},         {{0, 1}},         {{1, 0}},
            {{1, 1}},         {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}},
            {{0, 0}, {1, 1}},  // XOR
        };
        std::vector<GatePartition> out;
        for (int id = 0; id < 7; ++id) {
            out.push_back({id, sides[id], complement(sides[id])});
        }
        return out;
    }();
    return gates;
}

void EncodingScheme::validate() const {
    if (spike_times.size() != 2) {
        throw std::invalid_argument("encoding needs one slot time per bit");
    }
    if (spike_times[0] == spike_times[1] || spike_times[0] < 0 ||
        spike_times[1] < 0) {
        throw std::invalid_argument("slot times must be distinct and >= 0");
    }
    const bool wants_refs =
        variant == EncodingVariant::APrime || variant == EncodingVariant::C;
    if (wants_refs && reference_spikes.empty()) {
        throw std::invalid_argument("variant A'/C needs reference spikes");
    }
    if (!wants_refs && !reference_spikes.empty()) {
        throw std::invalid_argument("variant A/B takes no reference spikes");
    }
}

TimeStep EncodingScheme::last_time() const {
    TimeStep last = std::max(spike_times[0], spike_times[1]);
    for (const auto& ref : reference_spikes) {
        last = std::max(last, ref.time);
    }
    return last;
}

std::string variant_label(EncodingVariant v) {
    switch (v) {
        case EncodingVariant::A: return "A";
        case EncodingVariant::APrime: return "A'";
        case EncodingVariant::B: return "B";
        case EncodingVariant::C: return "C";
    }
    return "?";
}

EncodingVariant parse_encoding_variant(const std::string& name) {
    if (name == "A") return EncodingVariant::A;
    if (name == "A'" || name == "Ap" || name == "Aprime") {
        return EncodingVariant::APrime;
    }
    if (name == "B") return EncodingVariant::B;
    if (name == "C") return EncodingVariant::C;
    throw std::invalid_argument("unknown encoding variant '" + name + "'");
}

EncodingScheme default_scheme(EncodingVariant v) {
    EncodingScheme scheme;
    scheme.variant = v;
    switch (v) {
        case EncodingVariant::A:
            scheme.amp_for_zero = 0.0;
            scheme.amp_for_one = 1.0;
            break;
        case EncodingVariant::APrime:
            scheme.amp_for_zero = 0.0;
            scheme.amp_for_one = 1.0;
            scheme.reference_spikes = {{4, 1.0}};
            break;
        case EncodingVariant::B:
            break;  // struct defaults: slots {0,2}, graded amplitudes {1,2}
        case EncodingVariant::C:
            scheme.amp_for_zero = -1.0;
            scheme.amp_for_one = 1.0;
            scheme.reference_spikes = {{4, 1.0}, {6, 1.0}};
            break;
    }
    return scheme;
}

SpikeTrain encode(const EncodingScheme& scheme, const InputPattern& pattern) {
    scheme.validate();
    std::vector<SpikeEvent> events;
    const int bits[2] = {pattern.b1, pattern.b2};
    for (int i = 0; i < 2; ++i) {
        const double amp =
            bits[i] ? scheme.amp_for_one : scheme.amp_for_zero;
        if (amp != 0.0) {
            events.push_back({scheme.spike_times[i], amp});
        }
    }
    for (const auto& ref : scheme.reference_spikes) {
        events.push_back(ref);
    }
    return SpikeTrain(std::move(events));
}

}  // namespace spikegate
