#include "spikegate/reservoir.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <utility>

#include "spikegate/rng.hpp"

namespace spikegate {

void WeightMatrix::validate() const {
    if (n < 1 || w.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("weight matrix shape mismatch");
    }
    for (double v : w) {
        if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
            throw std::invalid_argument("weights must lie in [-1, 1]");
        }
    }
}

WeightMatrix sample_weights(int n, std::uint64_t rng_seed) {
    if (n < 1) {
        throw std::invalid_argument("reservoir size must be >= 1");
    }
    std::mt19937_64 rng(rng_seed);
    WeightMatrix m;
    m.n = n;
    m.w.resize(static_cast<std::size_t>(n) * n);
    for (auto& v : m.w) {
        // 21-value grid: k in 0..20 maps to (k - 10) / 10.
        v = (static_cast<int>(uniform_below(rng, 21)) - 10) / 10.0;
    }
    return m;
}

std::string weights_to_csv(const WeightMatrix& m) {
    std::string out;
    for (int j = 0; j < m.n; ++j) {
        for (int k = 0; k < m.n; ++k) {
            if (k > 0) {
                out += ',';
            }
            out += format_double(m.at(j, k));
        }
        out += '\n';
    }
    return out;
}

WeightMatrix weights_from_csv(const std::string& text, int n) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            auto next = line.find(',', pos);
            if (next == std::string::npos) {
                next = line.size();
            }
            double v = 0.0;
            const char* b = line.data() + pos;
            const char* e = line.data() + next;
            auto res = std::from_chars(b, e, v);
            if (res.ec != std::errc{} || res.ptr != e) {
                throw std::invalid_argument(
                    "weights line " + std::to_string(line_no) +
                    ": bad number '" + line.substr(pos, next - pos) + "'");
            }
            row.push_back(v);
            if (next == line.size()) {
                break;
            }
            pos = next + 1;
        }
        rows.push_back(std::move(row));
    }
    const int size = static_cast<int>(rows.size());
    if (size == 0 || (n != 0 && size != n)) {
        throw std::invalid_argument(
            "weights: expected " + std::to_string(n) + " rows, got " +
            std::to_string(size));
    }
    WeightMatrix m;
    m.n = size;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != size) {
            throw std::invalid_argument("weights: matrix is not square");
        }
        m.w.insert(m.w.end(), row.begin(), row.end());
    }
    m.validate();
    return m;
}

namespace {

SimulationTrace run_loop(const ReservoirConfig& config, const SpikeTrain& input,
                         bool record_trace) {
    config.neuron.validate();
    config.weights.validate();
    if (config.horizon < input.last_time()) {
        throw std::invalid_argument("horizon shorter than the input train");
    }

    const int n = config.weights.n;
    std::vector<NeuronState> states(n);
    std::vector<double> prev_emitted(n, 0.0);
    std::vector<double> now_emitted(n, 0.0);
    std::vector<std::vector<SpikeEvent>> events(n);

    SimulationTrace trace;
    for (TimeStep t = 0; t <= config.horizon; ++t) {
        const double external = input.amplitude_at(t);
        for (int k = 0; k < n; ++k) {
            double drive = k == 0 ? external : 0.0;
            for (int j = 0; j < n; ++j) {
                if (prev_emitted[j] != 0.0) {
                    drive += config.weights.at(j, k) * prev_emitted[j];
                }
            }
            now_emitted[k] = step(config.neuron, states[k], drive);
            if (now_emitted[k] != 0.0) {
                events[k].push_back({t, now_emitted[k]});
            }
        }
        std::swap(prev_emitted, now_emitted);
        if (record_trace) {
            std::vector<double> potentials(n);
            for (int k = 0; k < n; ++k) {
                potentials[k] = states[k].u;
            }
            trace.potentials.push_back(std::move(potentials));
            trace.emissions.push_back(prev_emitted);
        }
    }

    trace.outputs.reserve(n);
    for (int k = 0; k < n; ++k) {
        trace.outputs.emplace_back(std::move(events[k]));
    }
    trace.final_potentials.resize(n);
    for (int k = 0; k < n; ++k) {
        trace.final_potentials[k] = states[k].u;
    }
    return trace;
}

}  // namespace

std::vector<SpikeTrain> simulate(const ReservoirConfig& config,
                                 const SpikeTrain& input) {
    return run_loop(config, input, false).outputs;
}

SimulationTrace simulate_trace(const ReservoirConfig& config,
                               const SpikeTrain& input) {
    return run_loop(config, input, true);
}

}  // namespace spikegate
