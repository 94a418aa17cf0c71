#ifndef SWARMTOPO_SWARM_ENGINE_HPP
#define SWARMTOPO_SWARM_ENGINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "swarmtopo/benchmarks.hpp"
#include "swarmtopo/coefficients.hpp"
#include "swarmtopo/initialization.hpp"
#include "swarmtopo/rng.hpp"
#include "swarmtopo/swarm_state.hpp"
#include "swarmtopo/topology.hpp"

namespace swarmtopo {

/// Coefficient schemes materialized for a swarm of m particles:
/// resolved tuples plus the per-particle tag into them. Tags are
/// constant over a run.
struct SchemeSet {
    std::vector<ResolvedCoefficients> resolved;
    std::vector<int> tags;
    std::vector<int> block_sizes;
};

/// Contiguous blocks of sizes as equal as possible, one scheme per
/// block (17/17/16 for m = 50 and three schemes).
std::vector<int> multi_swarm_assign(int m, int scheme_count);

/// Resolve a parsed scheme spec for a concrete swarm size.
SchemeSet materialize(const SchemeSpec& spec, int m, std::string* warning = nullptr);

struct RunSettings {
    int m = 50;
    int T = 10000;
    int lhs_candidates = 1000;
    int t_ref = 100;
    std::vector<int> checkpoints; // sorted ascending; T itself is always recorded
};

/// Per-run output: the gbest error after initialization and after every
/// step, plus (step, value) records at each checkpoint.
struct RunRecord {
    std::vector<double> error_history;
    std::vector<std::pair<int, double>> checkpoint_error;
    std::vector<std::pair<int, double>> checkpoint_pb_me;

    double final_error() const { return error_history.back(); }
};

struct StepScratch {
    NeighbourSet set;
    NeighbourScratch pool;
};

/// One synchronous time-step: for every particle, in index order, draw
/// its neighbourhood, read its lbest from the time-t personal bests,
/// sample fresh phi pairs per component, and move
///   v <- w*v + phi_i*(pbest - x) + phi_s*(lbest - x),  x <- x + v.
/// Only after all particles have moved are the new positions evaluated;
/// positions outside the feasible intervals are not evaluated, and a
/// personal best is replaced only on strict improvement.
void step(SwarmState& state, const Topology& topo, const BenchmarkProblem& problem,
          const SchemeSet& schemes, int T, Pcg64& rng, StepScratch& scratch);

void step(SwarmState& state, const Topology& topo, const BenchmarkProblem& problem,
          const SchemeSet& schemes, int T, Pcg64& rng);

/// Initialize and run T steps, recording the error history and the
/// checkpoint statistics. The RNG is consumed in a pinned order
/// (initialization draws, then per step: particles in index order,
/// neighbourhood draws before the per-component phi_i/phi_s pairs), so
/// a (seed, config) pair fully determines the record.
RunRecord run(const BenchmarkProblem& problem, const Topology& topo,
              const SchemeSet& schemes, const RunSettings& settings, Pcg64& rng);

/// Advance `rng` past exactly the draws one run would consume, without
/// running it. Lets a batch of runs sharing one logical stream start
/// from precomputed boundary states.
void advance_past_run(const BenchmarkProblem& problem, const Topology& topo,
                      const SchemeSet& schemes, const RunSettings& settings,
                      Pcg64& rng);

} // namespace swarmtopo

#endif
