#include "spikegate/sweep.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spikegate/neuron.hpp"
#include "spikegate/reservoir.hpp"
#include "spikegate/rng.hpp"

namespace spikegate {

namespace {

constexpr int kGates = 7;

struct CellOutcome {
    bool failed = false;
    bool solvable = false;
    bool boundary = false;
    double l1_total = 0.0;  // sum over all 4 patterns and all neurons
};

struct RunResult {
    std::uint64_t seed = 0;
    // variant-major, then beta, then gate (same order as report cells)
    std::vector<CellOutcome> outcomes;
    int certificate_failures = 0;
};

NeuronConfig make_neuron(const SweepConfig& config, const std::string& variant,
                         double beta) {
    NeuronConfig neuron = variant_config(variant);
    neuron.theta = config.theta;
    neuron.beta = beta;
    neuron.t_r =
        neuron.reset == ResetMechanism::BySubtraction ? config.t_r : 0;
    return neuron;
}

RunResult run_one(const SweepConfig& config, int run_index,
                  const VerdictHook& hook) {
    RunResult result;
    result.seed = derive_seed(config.base_seed, run_index);
    result.outcomes.resize(config.variants.size() * config.betas.size() *
                           kGates);

    WeightMatrix weights = sample_weights(config.n_neurons, result.seed);
    if (!config.self_connections) {
        for (int k = 0; k < weights.n; ++k) {
            weights.at(k, k) = 0.0;
        }
    }

    const auto& gates = all_gates();
    std::size_t cell = 0;
    for (const auto& variant : config.variants) {
        for (double beta : config.betas) {
            std::vector<FeatureVector> pattern_features;
            double l1_total = 0.0;
            bool sim_failed = false;
            try {
                ReservoirConfig reservoir{make_neuron(config, variant, beta),
                                          weights, config.horizon};
                for (const auto& pattern : kAllPatterns) {
                    const auto outputs =
                        simulate(reservoir, encode(config.encoding, pattern));
                    pattern_features.push_back(features(outputs));
                    for (const auto& train : outputs) {
                        l1_total += l1_norm(train);
                    }
                }
            } catch (const std::exception&) {
                sim_failed = true;
            }

            for (int gate = 0; gate < kGates; ++gate, ++cell) {
                auto& outcome = result.outcomes[cell];
                outcome.l1_total = l1_total;
                if (sim_failed) {
                    outcome.failed = true;
                    continue;
                }
                SeparabilityInstance instance;
                for (const auto& pattern : gates[gate].class_a) {
                    for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
                        if (kAllPatterns[i] == pattern) {
                            instance.class_a.push_back(pattern_features[i]);
                        }
                    }
                }
                for (const auto& pattern : gates[gate].class_b) {
                    for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
                        if (kAllPatterns[i] == pattern) {
                            instance.class_b.push_back(pattern_features[i]);
                        }
                    }
                }
                try {
                    const SeparabilityVerdict verdict =
                        hook ? hook(instance, result.seed, gate)
                             : is_separable(instance);
                    outcome.solvable = verdict.separable;
                    outcome.boundary = verdict.boundary;
                } catch (const LpError&) {
                    outcome.failed = true;
                    ++result.certificate_failures;
                } catch (const std::exception&) {
                    outcome.failed = true;
                }
            }
        }
    }
    return result;
}

SweepReport aggregate(const SweepConfig& config,
                      const std::vector<RunResult>& results) {
    SweepReport report;
    report.config = config;
    report.run_seeds.reserve(results.size());
    for (const auto& r : results) {
        report.run_seeds.push_back(r.seed);
        report.certificate_failures += r.certificate_failures;
    }

    const std::size_t cell_count =
        config.variants.size() * config.betas.size() * kGates;
    report.cells.resize(cell_count);
    std::size_t cell = 0;
    for (const auto& variant : config.variants) {
        for (double beta : config.betas) {
            for (int gate = 0; gate < kGates; ++gate, ++cell) {
                auto& out = report.cells[cell];
                out.gate = gate;
                out.variant = variant;
                out.beta = beta;
                std::vector<double> l1_samples;
                for (const auto& r : results) {
                    const auto& outcome = r.outcomes[cell];
                    if (outcome.failed) {
                        ++out.failures;
                        continue;
                    }
                    ++out.runs;
                    if (outcome.solvable) {
                        ++out.solvable_count;
                        l1_samples.push_back(outcome.l1_total);
                    }
                    if (outcome.boundary) {
                        ++out.boundary_count;
                    }
                }
                out.invalid = out.failures * 100 > config.runs;
                out.probability_pct =
                    out.runs > 0
                        ? 100.0 * out.solvable_count / out.runs
                        : 0.0;
                if (const auto stats = l1_statistics(l1_samples)) {
                    out.l1_mean = stats->first;
                    out.l1_std = stats->second;
                }
            }
        }
    }
    return report;
}

}  // namespace

void SweepConfig::validate() const {
    if (n_neurons < 1) {
        throw std::invalid_argument("n_neurons must be >= 1");
    }
    if (runs < 1) {
        throw std::invalid_argument("runs must be >= 1");
    }
    if (variants.empty()) {
        throw std::invalid_argument("at least one neuron variant");
    }
    for (const auto& v : variants) {
        variant_config(v);  // throws on unknown names
    }
    if (betas.empty()) {
        throw std::invalid_argument("at least one beta");
    }
    for (double b : betas) {
        if (!(b > 0.0) || b > 1.0) {
            throw std::invalid_argument("beta must lie in (0, 1]");
        }
    }
    encoding.validate();
    if (horizon < encoding.last_time() + 1) {
        throw std::invalid_argument("horizon must cover the encoded input");
    }
    if (!(theta > 0.0)) {
        throw std::invalid_argument("theta must be positive");
    }
    if (t_r < 0 || threads < 0) {
        throw std::invalid_argument("t_r and threads must be >= 0");
    }
}

const SweepCell& SweepReport::cell(std::size_t variant_idx,
                                   std::size_t beta_idx, int gate) const {
    return cells[(variant_idx * config.betas.size() + beta_idx) * kGates +
                 gate];
}

bool SweepReport::any_invalid() const {
    for (const auto& c : cells) {
        if (c.invalid) {
            return true;
        }
    }
    return false;
}

std::optional<std::pair<double, double>> l1_statistics(
    const std::vector<double>& samples) {
    if (samples.empty()) {
        return std::nullopt;
    }
    double mean = 0.0;
    for (double s : samples) {
        mean += s;
    }
    mean /= static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) {
        var += (s - mean) * (s - mean);
    }
    var /= static_cast<double>(samples.size());
    return std::make_pair(mean, std::sqrt(var));
}

SweepReport run_sweep_serial(const SweepConfig& config,
                             const VerdictHook& hook) {
    config.validate();
    std::vector<RunResult> results(config.runs);
    for (int r = 0; r < config.runs; ++r) {
        results[r] = run_one(config, r, hook);
    }
    return aggregate(config, results);
}

SweepReport run_sweep(const SweepConfig& config, const VerdictHook& hook) {
    config.validate();
    std::vector<RunResult> results(config.runs);
#ifdef _OPENMP
    const int threads =
        config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int r = 0; r < config.runs; ++r) {
        results[r] = run_one(config, r, hook);
    }
#else
    for (int r = 0; r < config.runs; ++r) {
        results[r] = run_one(config, r, hook);
    }
#endif
    return aggregate(config, results);
}

}  // namespace spikegate
