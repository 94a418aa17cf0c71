#ifndef SWARMTOPO_CONFIG_FILE_HPP
#define SWARMTOPO_CONFIG_FILE_HPP

#include <filesystem>
#include <istream>
#include <vector>

#include "swarmtopo/harness.hpp"

namespace swarmtopo {

/// Parse the experiment-list config format (format version 1):
/// line-based key = value pairs, '#' comments, one [experiment] section
/// per experiment. Keys before the first section set defaults for every
/// experiment. Keys: problem, dims, scheme, topology, swarm-size,
/// steps, runs, seed, t-ref, lhs-candidates, checkpoints (comma list).
/// Throws std::invalid_argument on unknown keys or malformed lines.
std::vector<ExperimentConfig> parse_experiment_configs(std::istream& in);

std::vector<ExperimentConfig> load_experiment_configs(const std::filesystem::path& path);

} // namespace swarmtopo

#endif
