#ifndef SWARMTOPO_REPORT_IO_HPP
#define SWARMTOPO_REPORT_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "swarmtopo/harness.hpp"

namespace swarmtopo {

inline constexpr int kConfigFormatVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Scientific notation with 3 significant digits, e.g. "3.21E-08",
/// "0.00E+00"; matches the statistics tables' cell format.
std::string sci3(double value);

/// One parsed row of a stats table.
struct TableRow {
    std::string problem;
    int dims = 0;
    std::string scheme;
    std::string topology;
    int step = 0;
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double mean_pb_me = 0.0;
    double success = -1.0; // -1 encodes the "-" cell of intermediate rows
};

/// Render the statistics table: one row per scheme x topology x
/// checkpoint, checkpoints in descending step order, success printed
/// only for the final (step T) row. Tab-separated with a header line.
std::string render_table(std::span<const ExperimentReport> reports);

/// Parse text produced by render_table (round-trip check and tooling).
std::vector<TableRow> parse_table(const std::string& text);

/// Render convergence curves: column "step" plus one column of mean
/// best conflict per experiment; experiments shorter than the longest
/// leave trailing cells empty.
std::string render_curves(std::span<const ExperimentReport> reports);

/// JSON persistence for a single experiment report.
void report_to_file(const ExperimentReport& report, const std::filesystem::path& path);
ExperimentReport report_from_file(const std::filesystem::path& path);

/// Write the full output bundle under `dir`:
///   tables/<problem>-<dims>d.tsv   one stats table per problem x dims
///   curves/<problem>-<dims>d.tsv   matching convergence data
///   reports/<experiment id>.json   one report per experiment
///   manifest.json                  config echo, seed(s), version, timings
/// Everything except the manifest's "timings" object is a deterministic
/// function of the configs. Returns the list of files written.
std::vector<std::filesystem::path> write_output_bundle(
    std::span<const GridOutcome> outcomes, const std::filesystem::path& dir,
    double wall_seconds, int threads);

} // namespace swarmtopo

#endif
