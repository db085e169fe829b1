// Fully connected reservoir of N identical LIF neurons.
//
// The external input feeds neuron 0 with weight 1 (encoder row (1,0,...,0));
// recurrent spikes arrive with exactly one tick of synaptic delay, so the
// per-tick update reads only the previous tick's emissions and neuron order
// within a tick is irrelevant.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikegate/neuron.hpp"
#include "spikegate/spike_train.hpp"

namespace spikegate {

struct WeightMatrix {
    int n = 0;
    std::vector<double> w;  // row-major; w[j*n + k] = weight j -> k

    double at(int j, int k) const { return w[static_cast<std::size_t>(j) * n + k]; }
    double& at(int j, int k) { return w[static_cast<std::size_t>(j) * n + k]; }

    void validate() const;  // entries must be finite and lie in [-1, 1]
};

// Entries drawn independently and uniformly from the 21-value grid
// {-1.0, -0.9, ..., 1.0}; deterministic given the seed.
WeightMatrix sample_weights(int n, std::uint64_t rng_seed);

// CSV text, row-major, one row per line. parse validates shape and range;
// n = 0 accepts any square matrix.
std::string weights_to_csv(const WeightMatrix& m);
WeightMatrix weights_from_csv(const std::string& text, int n = 0);

struct ReservoirConfig {
    NeuronConfig neuron;
    WeightMatrix weights;
    TimeStep horizon = 20;
};

// Synchronous tick loop over 0..horizon from zero states; returns the N
// emitted trains.
std::vector<SpikeTrain> simulate(const ReservoirConfig& config,
                                 const SpikeTrain& input);

// Per-tick trace of the same loop, for the CLI `simulate` command.
struct SimulationTrace {
    std::vector<std::vector<double>> potentials;  // [tick][neuron], post-update
    std::vector<std::vector<double>> emissions;   // [tick][neuron], 0 = none
    std::vector<SpikeTrain> outputs;
    std::vector<double> final_potentials;
};

SimulationTrace simulate_trace(const ReservoirConfig& config,
                               const SpikeTrain& input);

}  // namespace spikegate
