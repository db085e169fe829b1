// Leaky integrate-and-fire neuron as a per-tick state machine.
//
// Six variants arise from thresholding mode (positive-only or symmetric)
// crossed with the reset mechanism (to-zero, by-subtraction, to-mod):
//
//   SRM  symmetric  reset-to-mod
//   SRS  symmetric  reset-by-subtraction
//   SRZ  symmetric  reset-to-zero
//   PRM  positive   reset-to-mod
//   PRS  positive   reset-by-subtraction
//   PRZ  positive   reset-to-zero
//
// Per tick the order is: leak, integrate, threshold, reset. With beta = 1
// this reduces to a pure integrate-and-fire. Reset-to-mod acts as an
// instantaneously cascaded reset-by-subtraction: the potential u = n*theta + r
// collapses to the residue r in one tick and the spike carries the graded
// amplitude n*theta. Only reset-by-subtraction arms the refractory clock;
// during refractory ticks input still integrates (with leak) but cannot
// trigger a spike.
#pragma once

#include <string>
#include <utility>

#include "spikegate/spike_train.hpp"

namespace spikegate {

enum class ThresholdMode { Positive, Symmetric };
enum class ResetMechanism { ToZero, BySubtraction, ToMod };

struct NeuronConfig {
    ThresholdMode mode = ThresholdMode::Positive;
    ResetMechanism reset = ResetMechanism::ToMod;
    double theta = 1.0;  // threshold, > 0
    double beta = 1.0;   // per-tick leak multiplier, in (0, 1]
    int t_r = 0;         // refractory ticks, >= 0; must be 0 for ToMod

    // Throws std::invalid_argument when a field is out of range or the
    // reset/refractory combination is inconsistent.
    void validate() const;
};

struct NeuronState {
    double u = 0.0;  // membrane potential
    int refractory_remaining = 0;
};

// Variant abbreviations as used in all configs and reports.
std::string variant_name(const NeuronConfig& config);
// Builds a config from an abbreviation (SRM, SRS, SRZ, PRM, PRS, PRZ).
// theta/beta/t_r keep their defaults; throws on unknown names.
NeuronConfig variant_config(const std::string& name);

// Advances one tick. Returns the emitted amplitude (0 = no spike) and
// mutates the state in place. Throws std::domain_error on non-finite input.
double step(const NeuronConfig& config, NeuronState& state, double input);

// Runs from the zero state over ticks 0..horizon (inclusive), feeding the
// train's amplitudes as input, and collects nonzero emissions.
SpikeTrain run(const NeuronConfig& config, const SpikeTrain& input,
               TimeStep horizon);

// Same, additionally returning the final state (conservation checks need
// the residual potential).
std::pair<SpikeTrain, NeuronState> run_with_state(const NeuronConfig& config,
                                                  const SpikeTrain& input,
                                                  TimeStep horizon);

}  // namespace spikegate
