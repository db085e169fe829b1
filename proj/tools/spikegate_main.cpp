// spikegate CLI: single-trace simulation, one-off separability checks, and
// full Monte Carlo sweeps with report emission.
//
// Exit codes are a stable contract:
//   0  success (check: separable)
//   1  check: not separable
//   2  configuration, parse or I/O error
//   3  sweep finished but at least one cell was flagged invalid
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spikegate/encoding.hpp"
#include "spikegate/neuron.hpp"
#include "spikegate/report.hpp"
#include "spikegate/reservoir.hpp"
#include "spikegate/separability.hpp"
#include "spikegate/spike_train.hpp"
#include "spikegate/sweep.hpp"

namespace {

using namespace spikegate;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string vector_text(const std::vector<double>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_double(v[i]);
    }
    return out + ")";
}

// Encoding options shared by `check` and `sweep`.
struct EncodingFlags {
    std::string name = "B";
    std::vector<TimeStep> times;
    double amp0 = 0.0;
    double amp1 = 0.0;
    std::string refs;
    CLI::Option* amp0_opt = nullptr;
    CLI::Option* amp1_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--encoding", name,
                        "Encoding variant: A, A', B or C")
            ->capture_default_str();
        cmd->add_option("--enc-times", times,
                        "Slot times for bit 1 and bit 2, e.g. 0,2")
            ->delimiter(',');
        amp0_opt = cmd->add_option("--enc-amp0", amp0,
                                   "Amplitude injected for a 0 bit");
        amp1_opt = cmd->add_option("--enc-amp1", amp1,
                                   "Amplitude injected for a 1 bit");
        cmd->add_option("--enc-refs", refs,
                        "Reference spikes as t:a,... (variants A'/C)");
    }

    EncodingScheme build() const {
        EncodingScheme scheme = default_scheme(parse_encoding_variant(name));
        if (!times.empty()) {
            scheme.spike_times = times;
        }
        if (amp0_opt && amp0_opt->count() > 0) {
            scheme.amp_for_zero = amp0;
        }
        if (amp1_opt && amp1_opt->count() > 0) {
            scheme.amp_for_one = amp1;
        }
        if (!refs.empty()) {
            scheme.reference_spikes = parse_train(refs).events();
        }
        scheme.validate();
        return scheme;
    }
};

struct SimulateArgs {
    std::string variant = "PRM";
    double theta = 1.0;
    double beta = 1.0;
    int t_r = 0;
    std::string input_text;
    std::string input_file;
    std::string weights_file;
    int n = 1;
    CLI::Option* n_opt = nullptr;
    TimeStep horizon = -1;  // default: input end + 20
};

int cmd_simulate(const SimulateArgs& args) {
    NeuronConfig neuron = variant_config(args.variant);
    neuron.theta = args.theta;
    neuron.beta = args.beta;
    neuron.t_r = args.t_r;

    const SpikeTrain input = parse_train(
        args.input_file.empty() ? args.input_text
                                : read_file(args.input_file));

    ReservoirConfig config;
    config.neuron = neuron;
    if (args.weights_file.empty()) {
        config.weights =
            WeightMatrix{args.n, std::vector<double>(
                                     static_cast<std::size_t>(args.n) * args.n,
                                     0.0)};
    } else {
        const int expected =
            args.n_opt && args.n_opt->count() > 0 ? args.n : 0;
        config.weights =
            weights_from_csv(read_file(args.weights_file), expected);
    }
    config.horizon =
        args.horizon >= 0 ? args.horizon : input.last_time() + 20;

    const SimulationTrace trace = simulate_trace(config, input);
    const int n = config.weights.n;

    std::printf("tick");
    for (int k = 0; k < n; ++k) {
        std::printf("\tu[%d]\temit[%d]", k, k);
    }
    std::printf("\n");
    for (std::size_t t = 0; t < trace.potentials.size(); ++t) {
        std::printf("%zu", t);
        for (int k = 0; k < n; ++k) {
            std::printf("\t%s\t%s", short_num(trace.potentials[t][k]).c_str(),
                        short_num(trace.emissions[t][k]).c_str());
        }
        std::printf("\n");
    }
    for (int k = 0; k < n; ++k) {
        std::printf("neuron %d spikes: %s\n", k,
                    format_train(trace.outputs[k]).c_str());
        std::printf("neuron %d final u: %s\n", k,
                    short_num(trace.final_potentials[k]).c_str());
    }
    return 0;
}

struct CheckArgs {
    std::string weights_file;
    std::string features_file;
    int gate = 6;
    std::string variant = "PRM";
    double theta = 1.0;
    double beta = 1.0;
    int t_r = 0;
    int n = 0;  // 0 = infer from the weights file
    TimeStep horizon = 20;
    EncodingFlags encoding;
};

int cmd_check(const CheckArgs& args) {
    if (args.gate < 0 || args.gate > 6) {
        throw std::runtime_error("gate id must lie in 0..6");
    }
    std::vector<FeatureVector> pattern_features;
    if (!args.features_file.empty()) {
        // One row per pattern in the order (0,0),(0,1),(1,0),(1,1).
        std::istringstream in(read_file(args.features_file));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            FeatureVector v;
            std::istringstream row(line);
            std::string tok;
            while (std::getline(row, tok, ',')) {
                v.push_back(std::stod(tok));
            }
            pattern_features.push_back(std::move(v));
        }
        if (pattern_features.size() != 4) {
            throw std::runtime_error("feature file must hold 4 rows");
        }
    } else {
        if (args.weights_file.empty()) {
            throw std::runtime_error("need --weights or --features");
        }
        ReservoirConfig config;
        config.neuron = variant_config(args.variant);
        config.neuron.theta = args.theta;
        config.neuron.beta = args.beta;
        config.neuron.t_r = config.neuron.reset == ResetMechanism::BySubtraction
                                ? args.t_r
                                : 0;
        config.weights = weights_from_csv(read_file(args.weights_file), args.n);
        config.horizon = args.horizon;
        const EncodingScheme scheme = args.encoding.build();
        for (const auto& pattern : kAllPatterns) {
            pattern_features.push_back(
                features(simulate(config, encode(scheme, pattern))));
        }
    }

    const auto& gate = all_gates()[args.gate];
    SeparabilityInstance instance;
    for (const auto& p : gate.class_a) {
        for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
            if (kAllPatterns[i] == p) {
                instance.class_a.push_back(pattern_features[i]);
            }
        }
    }
    for (const auto& p : gate.class_b) {
        for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
            if (kAllPatterns[i] == p) {
                instance.class_b.push_back(pattern_features[i]);
            }
        }
    }

    for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
        std::printf("pattern (%d,%d): v = %s\n", kAllPatterns[i].b1,
                    kAllPatterns[i].b2,
                    vector_text(pattern_features[i]).c_str());
    }
    std::printf("gate %d: class A = %s\n", gate.id,
                gate.class_a_label().c_str());

    const SeparabilityVerdict verdict = is_separable(instance);
    std::printf("verdict: %s%s\n",
                verdict.separable ? "separable" : "not separable",
                verdict.boundary ? " (boundary)" : "");
    if (verdict.separable) {
        std::printf("witness: D = %s, threshold = %s\n",
                    vector_text(verdict.witness->decoder).c_str(),
                    format_double(verdict.witness->threshold).c_str());
        return 0;
    }
    std::printf("hull combination: x = %s\n",
                vector_text(verdict.hull_combination).c_str());
    return 1;
}

struct SweepArgs {
    SweepConfig config;
    EncodingFlags encoding;
    std::vector<std::string> variants;
    std::vector<double> betas;
    std::string out_dir = "out";
    bool serial = false;
};

int cmd_sweep(SweepArgs& args, const std::string& command_line) {
    if (!args.variants.empty()) {
        args.config.variants = args.variants;
    }
    if (!args.betas.empty()) {
        args.config.betas = args.betas;
    }
    args.config.encoding = args.encoding.build();
    args.config.validate();

    const SweepReport report = args.serial
                                   ? run_sweep_serial(args.config)
                                   : run_sweep(args.config);
    const auto artifacts =
        write_reports(report, args.out_dir, command_line);
    std::printf("%s", render_probability_text(report).c_str());
    for (const auto& path : artifacts.paths) {
        std::fprintf(stderr, "wrote %s\n", path.c_str());
    }
    if (report.certificate_failures > 0) {
        std::fprintf(stderr, "certificate failures: %d\n",
                     report.certificate_failures);
    }
    return report.any_invalid() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LIF reservoir simulator and gate-separability harness"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Trace one reservoir (or single neuron) run");
    sim_cmd->add_option("--variant", sim.variant, "SRM|SRS|SRZ|PRM|PRS|PRZ")
        ->capture_default_str();
    sim_cmd->add_option("--theta", sim.theta, "Threshold")->capture_default_str();
    sim_cmd->add_option("--beta", sim.beta, "Per-tick leak in (0,1]")
        ->capture_default_str();
    sim_cmd->add_option("--t-r", sim.t_r, "Refractory ticks")
        ->capture_default_str();
    sim_cmd->add_option("--input", sim.input_text, "Input train, e.g. 0:2.3");
    sim_cmd->add_option("--input-file", sim.input_file,
                        "File holding the input train text");
    sim_cmd->add_option("--weights", sim.weights_file,
                        "Weight matrix CSV (omit for one isolated neuron)");
    sim.n_opt =
        sim_cmd->add_option("--n", sim.n, "Reservoir size")->capture_default_str();
    sim_cmd->add_option("--horizon", sim.horizon,
                        "Last simulated tick (default: input end + 20)");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand(
        "check", "Decide separability of one gate under one weight draw");
    check_cmd->add_option("--weights", check.weights_file, "Weight matrix CSV");
    check_cmd->add_option("--features", check.features_file,
                          "Skip the reservoir: 4 feature rows, one per pattern");
    check_cmd->add_option("--gate", check.gate, "Gate id 0..6 (6 = XOR)")
        ->capture_default_str();
    check_cmd->add_option("--variant", check.variant, "Neuron variant")
        ->capture_default_str();
    check_cmd->add_option("--theta", check.theta, "Threshold")
        ->capture_default_str();
    check_cmd->add_option("--beta", check.beta, "Per-tick leak")
        ->capture_default_str();
    check_cmd->add_option("--t-r", check.t_r, "Refractory ticks (*RS only)")
        ->capture_default_str();
    check_cmd->add_option("--n", check.n,
                          "Reservoir size (default: rows of --weights)");
    check_cmd->add_option("--horizon", check.horizon, "Last simulated tick")
        ->capture_default_str();
    check.encoding.attach(check_cmd);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Monte Carlo sweep over gates, variants and betas");
    sweep_cmd->set_config("--config", "", "Key=value config file");
    sweep_cmd->add_option("--n", sweep.config.n_neurons, "Reservoir size")
        ->capture_default_str();
    sweep_cmd->add_option("--runs", sweep.config.runs, "Runs per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.config.base_seed, "Base RNG seed")
        ->capture_default_str();
    sweep_cmd->add_option("--variants", sweep.variants,
                          "Comma-separated variant list")
        ->delimiter(',');
    sweep_cmd->add_option("--betas", sweep.betas, "Comma-separated leak list")
        ->delimiter(',');
    sweep_cmd->add_option("--theta", sweep.config.theta, "Threshold")
        ->capture_default_str();
    sweep_cmd->add_option("--t-r", sweep.config.t_r,
                          "Refractory ticks for the *RS variants")
        ->capture_default_str();
    sweep_cmd->add_option("--horizon", sweep.config.horizon,
                          "Last simulated tick")
        ->capture_default_str();
    sweep_cmd->add_flag("!--no-self", sweep.config.self_connections,
                        "Zero the sampled diagonal");
    sweep_cmd->add_option("--threads", sweep.config.threads,
                          "Worker threads (0 = all cores)")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_dir, "Report output directory")
        ->envname("SPIKEGATE_OUT")
        ->capture_default_str();
    sweep_cmd->add_flag("--serial", sweep.serial,
                        "Use the serial reference engine");
    sweep.encoding.attach(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) {
            command_line += ' ';
        }
        command_line += argv[i];
    }

    try {
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check);
        }
        return cmd_sweep(sweep, command_line);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
