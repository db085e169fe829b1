#include "spikegate/report.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#ifndef SPIKEGATE_VERSION
#define SPIKEGATE_VERSION "0.0.0"
#endif

namespace spikegate {

namespace {

std::optional<double> cell_value(const SweepCell& cell, SweepMetric metric) {
    switch (metric) {
        case SweepMetric::Probability: return cell.probability_pct;
        case SweepMetric::L1Mean: return cell.l1_mean;
        case SweepMetric::L1Std: return cell.l1_std;
    }
    return std::nullopt;
}

std::string one_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            out += sep;
        }
        out += p;
    }
    return out;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string metric_name(SweepMetric metric) {
    switch (metric) {
        case SweepMetric::Probability: return "probability";
        case SweepMetric::L1Mean: return "l1_mean";
        case SweepMetric::L1Std: return "l1_std";
    }
    return "?";
}

std::vector<std::string> config_echo(const SweepConfig& config) {
    std::vector<std::string> refs;
    for (const auto& ev : config.encoding.reference_spikes) {
        refs.push_back(std::to_string(ev.time) + ":" +
                       format_double(ev.amplitude));
    }
    std::vector<std::string> betas;
    for (double b : config.betas) {
        betas.push_back(format_double(b));
    }
    std::vector<std::string> times;
    for (TimeStep t : config.encoding.spike_times) {
        times.push_back(std::to_string(t));
    }
    return {
        "n=" + std::to_string(config.n_neurons),
        "runs=" + std::to_string(config.runs),
        "seed=" + std::to_string(config.base_seed),
        "variants=" + join(config.variants, ','),
        "betas=" + join(betas, ','),
        "encoding=" + variant_label(config.encoding.variant),
        "enc_times=" + join(times, ','),
        "enc_amp0=" + format_double(config.encoding.amp_for_zero),
        "enc_amp1=" + format_double(config.encoding.amp_for_one),
        "enc_refs=" + join(refs, ','),
        "theta=" + format_double(config.theta),
        "t_r=" + std::to_string(config.t_r),
        "horizon=" + std::to_string(config.horizon),
        "self_connections=" +
            std::string(config.self_connections ? "true" : "false"),
    };
}

std::string render_csv(const SweepReport& report, SweepMetric metric) {
    std::string out;
    for (const auto& line : config_echo(report.config)) {
        out += "# " + line + "\n";
    }
    out += "gate,variant,beta,value\n";
    for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
        for (std::size_t b = 0; b < report.config.betas.size(); ++b) {
            for (int gate = 0; gate < 7; ++gate) {
                const auto& cell = report.cell(v, b, gate);
                const auto value = cell_value(cell, metric);
                out += std::to_string(cell.gate) + "," + cell.variant + "," +
                       format_double(cell.beta) + "," +
                       (value ? format_double(*value) : std::string("-")) +
                       "\n";
            }
        }
    }
    return out;
}

std::string render_gnuplot(const SweepReport& report, SweepMetric metric) {
    std::string out;
    for (const auto& line : config_echo(report.config)) {
        out += "# " + line + "\n";
    }
    for (std::size_t b = 0; b < report.config.betas.size(); ++b) {
        out += "# beta=" + format_double(report.config.betas[b]) + "\n";
        out += "# gate";
        for (const auto& variant : report.config.variants) {
            out += " " + variant;
        }
        out += "\n";
        for (int gate = 0; gate < 7; ++gate) {
            out += std::to_string(gate);
            for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
                const auto value = cell_value(report.cell(v, b, gate), metric);
                out += value ? " " + format_double(*value) : " nan";
            }
            out += "\n";
        }
        if (b + 1 < report.config.betas.size()) {
            out += "\n\n";
        }
    }
    return out;
}

namespace {

std::string markdown_table(const SweepReport& report, SweepMetric metric,
                           std::size_t beta_idx) {
    const auto& gates = all_gates();
    std::string out = "| Gate | Class A |";
    for (const auto& variant : report.config.variants) {
        out += " " + variant + " |";
    }
    out += "\n|---|---|";
    for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
        out += "---|";
    }
    out += "\n";
    for (int gate = 0; gate < 7; ++gate) {
        out += "| " + std::to_string(gate) + " | `" +
               gates[gate].class_a_label() + "` |";
        for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
            const auto value = cell_value(report.cell(v, beta_idx, gate), metric);
            out += value ? " " + one_decimal(*value) + " |" : " - |";
        }
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render_markdown(const SweepReport& report) {
    const char* titles[] = {"Solvability probability (%)",
                            "Mean of l1-norm of output spike trains",
                            "Standard deviation of l1-norm"};
    const SweepMetric metrics[] = {SweepMetric::Probability,
                                   SweepMetric::L1Mean, SweepMetric::L1Std};
    std::string out = "# Sweep report\n\n```\n";
    for (const auto& line : config_echo(report.config)) {
        out += line + "\n";
    }
    out += "```\n";
    for (int i = 0; i < 3; ++i) {
        out += "\n## " + std::string(titles[i]) + "\n";
        for (std::size_t b = 0; b < report.config.betas.size(); ++b) {
            out += "\nbeta = " + format_double(report.config.betas[b]) + "\n\n";
            out += markdown_table(report, metrics[i], b);
        }
    }
    return out;
}

std::string render_probability_text(const SweepReport& report) {
    std::string out;
    for (std::size_t b = 0; b < report.config.betas.size(); ++b) {
        out += "beta = " + format_double(report.config.betas[b]) + "\n";
        out += "gate";
        for (const auto& variant : report.config.variants) {
            out += "\t" + variant;
        }
        out += "\n";
        for (int gate = 0; gate < 7; ++gate) {
            out += std::to_string(gate);
            for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
                out += "\t" +
                       one_decimal(report.cell(v, b, gate).probability_pct);
            }
            out += "\n";
        }
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

}  // namespace

EmittedArtifacts write_reports(const SweepReport& report,
                               const std::string& out_dir,
                               const std::string& command_line) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    EmittedArtifacts artifacts;
    const SweepMetric metrics[] = {SweepMetric::Probability,
                                   SweepMetric::L1Mean, SweepMetric::L1Std};
    for (auto metric : metrics) {
        const auto csv_path =
            (fs::path(out_dir) / (metric_name(metric) + ".csv")).string();
        write_file(csv_path, render_csv(report, metric));
        artifacts.paths.push_back(csv_path);
        const auto dat_path =
            (fs::path(out_dir) / (metric_name(metric) + ".dat")).string();
        write_file(dat_path, render_gnuplot(report, metric));
        artifacts.paths.push_back(dat_path);
    }
    const auto md_path = (fs::path(out_dir) / "report.md").string();
    write_file(md_path, render_markdown(report));
    artifacts.paths.push_back(md_path);

    nlohmann::json manifest;
    manifest["command"] = command_line;
    manifest["tool_version"] = SPIKEGATE_VERSION;
    manifest["timestamp"] = timestamp_utc();
    manifest["base_seed"] = report.config.base_seed;
    for (const auto& line : config_echo(report.config)) {
        const auto eq = line.find('=');
        manifest["config"][line.substr(0, eq)] = line.substr(eq + 1);
    }
    manifest["run_seeds"] = report.run_seeds;
    manifest["certificate_failures"] = report.certificate_failures;
    manifest["artifacts"] = artifacts.paths;
    bool any_invalid = report.any_invalid();
    manifest["invalid_cells"] = any_invalid;

    artifacts.manifest_path = (fs::path(out_dir) / "manifest.json").string();
    write_file(artifacts.manifest_path, manifest.dump(2) + "\n");
    artifacts.paths.push_back(artifacts.manifest_path);
    return artifacts;
}

}  // namespace spikegate
