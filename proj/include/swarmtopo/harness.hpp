#ifndef SWARMTOPO_HARNESS_HPP
#define SWARMTOPO_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swarmtopo/metrics.hpp"
#include "swarmtopo/swarm_engine.hpp"

namespace swarmtopo {

/// One experiment: a (problem, dims, topology, scheme) cell of the
/// factorial grid, run `runs` times from a single seeded stream.
struct ExperimentConfig {
    std::string problem = "sphere";
    int dims = 2;
    std::string topology = "global";
    std::string scheme = "c-pso-1";
    int m = 50;
    int T = 10000;
    int runs = 25;
    std::uint64_t seed = 1;
    std::vector<int> checkpoints; // empty = default: {1000 when <= T} plus T
    int t_ref = 100;
    int lhs_candidates = 1000;

    /// Filesystem-safe identifier, e.g. "sphere-2d_c-pso-1_ring-nn-2".
    std::string id() const;
};

struct CheckpointStats {
    int step = 0;
    std::vector<double> errors; // per run, in run order
    std::vector<double> pb_mes;
    RunSummary summary;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<CheckpointStats> checkpoints; // ascending by step
    /// Mean best conflict per step across runs; length T+1 (step 0 is
    /// the initialization point). Freshly computed reports carry the
    /// full per-step curve (stride 1); reports reloaded from disk carry
    /// the persisted thinned one.
    std::vector<double> curve;
    int curve_stride = 1;
    /// Per-run error histories thinned to every `thin_stride`-th step
    /// (step 0 and step T always included).
    std::vector<std::vector<double>> thinned_histories;
    int thin_stride = 10;

    const CheckpointStats& at_step(int step) const;
    const CheckpointStats& final_checkpoint() const { return checkpoints.back(); }
};

/// Run one experiment. A single stream is seeded from cfg.seed and
/// logically consumed across all runs in order; runs execute in
/// parallel from jump-ahead boundary states, so the result is identical
/// to the sequential consumption at any thread count.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Reference path: the same experiment with the stream consumed run by
/// run on one thread, with no jump-ahead. Kept for tests and benchmarks;
/// must produce output identical to run_experiment.
ExperimentReport run_experiment_serial(const ExperimentConfig& cfg);

struct GridOutcome {
    ExperimentConfig config;
    std::optional<ExperimentReport> report;
    std::string error; // nonempty when the experiment failed
};

/// Run many experiments (parallel across experiments); outcomes keep
/// the input order, and per-experiment failures are captured without
/// aborting the rest of the grid.
std::vector<GridOutcome> run_grid(std::span<const ExperimentConfig> grid);

/// The full factorial comparison: 5 problems x {2,10,30} dimensions x
/// 4 schemes x 5 topologies = 300 experiments, every experiment seeded
/// with the same `seed` (the generator is reset at the start of each
/// experiment, never between runs).
std::vector<ExperimentConfig> paper_grid(std::uint64_t seed);

} // namespace swarmtopo

#endif
