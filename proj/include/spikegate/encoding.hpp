// Binary-gate partitions and temporal encodings of the 2-bit input patterns.
//
// Gate ids 0..5 follow a canonical order (singletons in pattern order, then
// the pair partitions containing (0,0)); id 6 is the XOR partition
// {(0,0),(1,1)} vs {(0,1),(1,0)}. Reports key results by the explicit
// class-a set as well as the id.
//
// The four encoding variants map a pattern (b1, b2) to spikes on the single
// input channel; each is a pluggable record so slot times, amplitudes and
// reference spikes can be overridden from the experiment config:
//
//   A   bit value b contributes amplitude b at slot i (zeros emit nothing)
//   A'  as A, plus one reference spike of amplitude 1 at a third time
//   B   graded same-sign spikes: amplitude 1 for a 0 bit, 2 for a 1 bit.
//       Both bits drive the dynamics and only the grade carries the bit,
//       so reset-to-zero neurons (which quantize every emission to one
//       theta) lose the distinction entirely.
//   C   mixed-sign spikes (amplitude 2b-1 in {-1,+1}) plus two reference
//       spikes of amplitude +1, lifting the representation from 2 to 4
//       spikes
#pragma once

#include <array>
#include <string>
#include <vector>

#include "spikegate/spike_train.hpp"

namespace spikegate {

struct InputPattern {
    int b1 = 0;
    int b2 = 0;

    friend bool operator==(const InputPattern&, const InputPattern&) = default;
};

// The four patterns in canonical order (0,0), (0,1), (1,0), (1,1).
constexpr std::array<InputPattern, 4> kAllPatterns = {
    InputPattern{0, 0}, InputPattern{0, 1}, InputPattern{1, 0},
    InputPattern{1, 1}};

struct GatePartition {
    int id = 0;  // 0..6
    std::vector<InputPattern> class_a;
    std::vector<InputPattern> class_b;

    std::string class_a_label() const;  // e.g. "{(0,0),(1,1)}"
};

// All 7 binary partitions of the pattern set; index equals the gate id,
// id 6 is XOR.
const std::vector<GatePartition>& all_gates();

enum class EncodingVariant { A, APrime, B, C };

struct EncodingScheme {
    EncodingVariant variant = EncodingVariant::B;
    std::vector<TimeStep> spike_times = {0, 2};  // slot per bit
    double amp_for_zero = 1.0;
    double amp_for_one = 2.0;
    std::vector<SpikeEvent> reference_spikes;  // variants A' and C

    void validate() const;  // throws std::invalid_argument
    TimeStep last_time() const;
};

std::string variant_label(EncodingVariant v);
EncodingVariant parse_encoding_variant(const std::string& name);

// Default reconstruction of a named variant (see the table above).
EncodingScheme default_scheme(EncodingVariant v);

// Deterministic train for one input pattern on the single input channel.
SpikeTrain encode(const EncodingScheme& scheme, const InputPattern& pattern);

}  // namespace spikegate
