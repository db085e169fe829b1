// Report rendering for sweep results: CSV per table analog, a Markdown
// rendering of the probability / l1 tables, gnuplot data files, and the
// JSON run manifest that ties the artifacts together.
#pragma once

#include <string>
#include <vector>

#include "spikegate/sweep.hpp"

namespace spikegate {

enum class SweepMetric { Probability, L1Mean, L1Std };

std::string metric_name(SweepMetric metric);

// Flat key=value echo of a resolved config, one entry per line when joined;
// embedded in every emitted file.
std::vector<std::string> config_echo(const SweepConfig& config);

// Columns gate,variant,beta,value; leading '#' lines carry the config echo.
// Missing l1 cells render as the "-" marker.
std::string render_csv(const SweepReport& report, SweepMetric metric);

// One block per beta, gate column followed by one column per variant;
// blocks are separated by two blank lines (gnuplot `index` addressing).
std::string render_gnuplot(const SweepReport& report, SweepMetric metric);

// All three tables, one section per metric, one table per beta, values
// rounded to one decimal as in the probability tables.
std::string render_markdown(const SweepReport& report);

// Plain text probability table for stdout.
std::string render_probability_text(const SweepReport& report);

struct EmittedArtifacts {
    std::vector<std::string> paths;  // everything written, manifest last
    std::string manifest_path;
};

// Writes probability/l1_mean/l1_std CSVs, .dat files, the Markdown report
// and manifest.json into out_dir (created if missing). The manifest embeds
// the command name, resolved config, base seed, artifact paths, tool
// version and timestamp.
EmittedArtifacts write_reports(const SweepReport& report,
                               const std::string& out_dir,
                               const std::string& command_line);

}  // namespace spikegate
