#ifndef SWARMTOPO_INITIALIZATION_HPP
#define SWARMTOPO_INITIALIZATION_HPP

#include <span>
#include <vector>

#include "swarmtopo/benchmarks.hpp"
#include "swarmtopo/rng.hpp"
#include "swarmtopo/swarm_state.hpp"

namespace swarmtopo {

struct InitConfig {
    int m = 50;
    int n = 2;
    int lhs_candidates = 1000;
};

/// One Latin hypercube sample in the unit cube, m x n row-major: per
/// column, one point per stratum [k/m, (k+1)/m) with a uniform offset,
/// row order shuffled. Consumes n * (2m - 1) raw draws.
std::vector<double> latin_hypercube(int m, int n, Pcg64& rng);

/// Squared minimum pairwise row distance of an m x n row-major matrix.
double min_pairwise_sqdist(std::span<const double> matrix, int m, int n);

/// Index of the candidate with the largest minimum pairwise distance;
/// ties keep the first encountered. Throws std::invalid_argument when
/// the list is empty.
std::size_t maximin_select(std::span<const std::vector<double>> candidates,
                           int m, int n);

/// Build the starting swarm: maximin-selected LHS positions scaled to
/// the feasible intervals, zero velocities, personal bests offset from
/// the positions by exactly (upper_j - lower_j) / (2m) per component
/// with a random sign, and the position/pbest pair swapped when the
/// position evaluates better. A pbest pushed outside the bounds is not
/// evaluated (conflict +inf), so the swap keeps the feasible point.
/// scheme_tag is left empty for the caller to fill.
SwarmState init_swarm(const InitConfig& cfg, const BenchmarkProblem& problem,
                      Pcg64& rng);

/// Multi-swarm initialization: each contiguous block is initialized
/// independently (its own LHS candidates, selection, and offsets, with
/// the offset magnitude using the block's own size), then the blocks
/// are concatenated into one population.
SwarmState init_swarm_blocks(const InitConfig& cfg, std::span<const int> block_sizes,
                             const BenchmarkProblem& problem, Pcg64& rng);

/// Raw draws init_swarm_blocks consumes (for jump-ahead planning).
std::uint64_t init_draw_count(const InitConfig& cfg, std::span<const int> block_sizes);

} // namespace swarmtopo

#endif
