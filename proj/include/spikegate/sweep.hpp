// Monte Carlo sweep over (gate x neuron variant x beta): solvability
// probability and l1-norm statistics of the reservoir output.
//
// One run draws a weight matrix from its derived seed and reuses it across
// every cell, so variant columns compare under the same draw. Runs are
// independent; the parallel engine distributes them over OpenMP workers and
// writes into per-run slots, which keeps reports bit-identical for any
// worker count. run_sweep_serial is the plain-loop reference the tests and
// the benchmark compare against.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spikegate/encoding.hpp"
#include "spikegate/separability.hpp"
#include "spikegate/spike_train.hpp"

namespace spikegate {

struct SweepConfig {
    int n_neurons = 2;
    int runs = 200;
    std::uint64_t base_seed = 1;
    std::vector<std::string> variants = {"SRM", "SRS", "SRZ",
                                         "PRM", "PRS", "PRZ"};
    std::vector<double> betas = {1.0, 0.5};
    EncodingScheme encoding = default_scheme(EncodingVariant::B);
    double theta = 1.0;
    int t_r = 1;  // refractory ticks, applied to the *RS variants only
    TimeStep horizon = 20;
    bool self_connections = true;  // keep the sampled diagonal
    int threads = 0;               // parallel engine only; 0 = runtime default

    void validate() const;
};

struct SweepCell {
    int gate = 0;
    std::string variant;
    double beta = 1.0;
    int solvable_count = 0;
    int runs = 0;      // runs counted for this cell (failures excluded)
    int failures = 0;  // simulation or LP errors, excluded from runs
    bool invalid = false;  // flagged when failures exceed 1% of all runs
    int boundary_count = 0;
    double probability_pct = 0.0;
    std::optional<double> l1_mean;  // over solvable runs; absent when none
    std::optional<double> l1_std;   // population standard deviation
};

struct SweepReport {
    SweepConfig config;
    std::vector<std::uint64_t> run_seeds;  // one per run, derived from base
    // Cell order: variant-major, then beta, then gate 0..6.
    std::vector<SweepCell> cells;
    int certificate_failures = 0;

    const SweepCell& cell(std::size_t variant_idx, std::size_t beta_idx,
                          int gate) const;
    bool any_invalid() const;
};

// Arithmetic mean and population standard deviation (divisor n); nullopt
// marks the paper's "not computable" case of an empty sample list.
std::optional<std::pair<double, double>> l1_statistics(
    const std::vector<double>& samples);

// Test seam: replaces is_separable for synthetic-probability checks.
using VerdictHook = std::function<SeparabilityVerdict(
    const SeparabilityInstance&, std::uint64_t run_seed, int gate)>;

SweepReport run_sweep(const SweepConfig& config,
                      const VerdictHook& hook = nullptr);
SweepReport run_sweep_serial(const SweepConfig& config,
                             const VerdictHook& hook = nullptr);

}  // namespace spikegate
