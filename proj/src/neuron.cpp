#include "spikegate/neuron.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spikegate {

void NeuronConfig::validate() const {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("theta must be positive and finite");
    }
    if (!(beta > 0.0) || beta > 1.0) {
        throw std::invalid_argument("beta must lie in (0, 1]");
    }
    if (t_r < 0) {
        throw std::invalid_argument("refractory time must be non-negative");
    }
    if (reset == ResetMechanism::ToMod && t_r != 0) {
        throw std::invalid_argument(
            "reset-to-mod requires zero refractory time");
    }
}

std::string variant_name(const NeuronConfig& config) {
    std::string name(1, config.mode == ThresholdMode::Symmetric ? 'S' : 'P');
    name += 'R';
    switch (config.reset) {
        case ResetMechanism::ToMod: name += 'M'; break;
        case ResetMechanism::BySubtraction: name += 'S'; break;
        case ResetMechanism::ToZero: name += 'Z'; break;
    }
    return name;
}

NeuronConfig variant_config(const std::string& name) {
    NeuronConfig config;
    if (name.size() != 3 || name[1] != 'R') {
        throw std::invalid_argument("unknown neuron variant '" + name + "'");
    }
    switch (name[0]) {
        case 'S': config.mode = ThresholdMode::Symmetric; break;
        case 'P': config.mode = ThresholdMode::Positive; break;
        default:
            throw std::invalid_argument("unknown neuron variant '" + name + "'");
    }
    switch (name[2]) {
        case 'M': config.reset = ResetMechanism::ToMod; break;
        case 'S': config.reset = ResetMechanism::BySubtraction; break;
        case 'Z': config.reset = ResetMechanism::ToZero; break;
        default:
            throw std::invalid_argument("unknown neuron variant '" + name + "'");
    }
    return config;
}

double step(const NeuronConfig& config, NeuronState& state, double input) {
    if (!std::isfinite(input)) {
        throw std::domain_error("non-finite neuron input");
    }

    if (state.refractory_remaining > 0) {
        --state.refractory_remaining;
        state.u = config.beta * state.u + input;
        return 0.0;
    }

    state.u = config.beta * state.u + input;

    const bool triggered = config.mode == ThresholdMode::Symmetric
                               ? std::abs(state.u) >= config.theta
                               : state.u >= config.theta;
    if (!triggered) {
        return 0.0;
    }

    const double sign = state.u < 0.0 ? -1.0 : 1.0;
    switch (config.reset) {
        case ResetMechanism::ToZero: {
            state.u = 0.0;
            return sign * config.theta;
        }
        case ResetMechanism::BySubtraction: {
            state.u -= sign * config.theta;
            state.refractory_remaining = config.t_r;
            return sign * config.theta;
        }
        case ResetMechanism::ToMod: {
            const double n = std::floor(std::abs(state.u) / config.theta);
            const double emitted = sign * n * config.theta;
            state.u -= emitted;
            return emitted;
        }
    }
    return 0.0;  // unreachable
}

std::pair<SpikeTrain, NeuronState> run_with_state(const NeuronConfig& config,
                                                  const SpikeTrain& input,
                                                  TimeStep horizon) {
    config.validate();
    if (horizon < input.last_time()) {
        throw std::invalid_argument("horizon shorter than the input train");
    }
    NeuronState state;
    std::vector<SpikeEvent> emitted;
    for (TimeStep t = 0; t <= horizon; ++t) {
        const double out = step(config, state, input.amplitude_at(t));
        if (out != 0.0) {
            emitted.push_back({t, out});
        }
    }
    return {SpikeTrain(std::move(emitted)), state};
}

SpikeTrain run(const NeuronConfig& config, const SpikeTrain& input,
               TimeStep horizon) {
    return run_with_state(config, input, horizon).first;
}

}  // namespace spikegate
