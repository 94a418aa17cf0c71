#include "swarmtopo/initialization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace swarmtopo {

std::vector<double> latin_hypercube(int m, int n, Pcg64& rng)
{
    if (m < 1 || n < 1) throw std::domain_error("latin_hypercube needs m, n >= 1");
    const auto mu = static_cast<std::size_t>(m);
    std::vector<double> sample(mu * static_cast<std::size_t>(n));
    std::vector<double> column(mu);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k)
            column[static_cast<std::size_t>(k)] =
                (static_cast<double>(k) + rng.uniform01()) / static_cast<double>(m);
        // Fisher-Yates, one draw per swap
        for (int k = m - 1; k >= 1; --k)
            std::swap(column[static_cast<std::size_t>(k)],
                      column[rng.bounded(static_cast<std::uint64_t>(k) + 1)]);
        for (int k = 0; k < m; ++k)
            sample[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)] = column[static_cast<std::size_t>(k)];
    }
    return sample;
}

double min_pairwise_sqdist(std::span<const double> matrix, int m, int n)
{
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            double d2 = 0.0;
            const double* ra = matrix.data() + static_cast<std::size_t>(a) *
                                                   static_cast<std::size_t>(n);
            const double* rb = matrix.data() + static_cast<std::size_t>(b) *
                                                   static_cast<std::size_t>(n);
            for (int j = 0; j < n; ++j) {
                const double d = ra[j] - rb[j];
                d2 += d * d;
            }
            if (d2 < best) best = d2;
        }
    }
    return best;
}

std::size_t maximin_select(std::span<const std::vector<double>> candidates,
                           int m, int n)
{
    if (candidates.empty())
        throw std::invalid_argument("maximin_select: no candidates");
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double d = min_pairwise_sqdist(candidates[c], m, n);
        if (d > best_dist) {
            best_dist = d;
            best = c;
        }
    }
    return best;
}

namespace {

// Initialize one block of `s` particles, writing rows [row0, row0+s) of
// `state`. Distances for the maximin pick are measured in physical
// (scaled) space; candidates are streamed so only the best is kept.
void init_block(SwarmState& state, int row0, int s, const InitConfig& cfg,
                const BenchmarkProblem& problem, Pcg64& rng)
{
    const int n = cfg.n;
    const auto nu = static_cast<std::size_t>(n);
    std::vector<double> scaled(static_cast<std::size_t>(s) * nu);
    std::vector<double> best_scaled;
    double best_dist = -1.0;
    for (int c = 0; c < cfg.lhs_candidates; ++c) {
        const std::vector<double> unit = latin_hypercube(s, n, rng);
        for (int k = 0; k < s; ++k)
            for (int j = 0; j < n; ++j) {
                const auto jj = static_cast<std::size_t>(j);
                scaled[static_cast<std::size_t>(k) * nu + jj] =
                    problem.lower[jj] +
                    unit[static_cast<std::size_t>(k) * nu + jj] *
                        (problem.upper[jj] - problem.lower[jj]);
            }
        const double d = min_pairwise_sqdist(scaled, s, n);
        if (d > best_dist) {
            best_dist = d;
            best_scaled = scaled;
        }
    }

    for (int k = 0; k < s; ++k) {
        const int i = row0 + k;
        auto pos = state.position(i);
        auto pb = state.pbest(i);
        for (int j = 0; j < n; ++j)
            pos[static_cast<std::size_t>(j)] =
                best_scaled[static_cast<std::size_t>(k) * nu + static_cast<std::size_t>(j)];
        // offset magnitude: feasible interval over twice this block's size
        for (int j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const double offset =
                (problem.upper[jj] - problem.lower[jj]) / (2.0 * static_cast<double>(s));
            const double sign = rng.bounded(2) == 0 ? -1.0 : 1.0;
            pb[jj] = pos[jj] + sign * offset;
        }
    }

    const double inf = std::numeric_limits<double>::infinity();
    for (int k = 0; k < s; ++k) {
        const int i = row0 + k;
        auto pos = state.position(i);
        auto pb = state.pbest(i);
        const double fp = problem.feasible(pos) ? conflict(problem, pos) : inf;
        const double fb = problem.feasible(pb) ? conflict(problem, pb) : inf;
        if (fp < fb) {
            for (int j = 0; j < n; ++j)
                std::swap(pos[static_cast<std::size_t>(j)], pb[static_cast<std::size_t>(j)]);
            state.pbest_conflict[static_cast<std::size_t>(i)] = fp;
        } else {
            state.pbest_conflict[static_cast<std::size_t>(i)] = fb;
        }
    }
}

} // namespace

SwarmState init_swarm_blocks(const InitConfig& cfg, std::span<const int> block_sizes,
                             const BenchmarkProblem& problem, Pcg64& rng)
{
    if (cfg.m < 3) throw std::domain_error("swarm size must be at least 3");
    if (cfg.lhs_candidates < 1) throw std::domain_error("need at least one LHS candidate");
    if (cfg.n != problem.n) throw std::invalid_argument("dimensionality mismatch");
    int total = 0;
    for (const int s : block_sizes) total += s;
    if (total != cfg.m) throw std::invalid_argument("block sizes must sum to m");

    SwarmState state;
    state.m = cfg.m;
    state.n = cfg.n;
    const auto cells = static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.n);
    state.x.assign(cells, 0.0);
    state.v.assign(cells, 0.0);
    state.pbest_x.assign(cells, 0.0);
    state.pbest_conflict.assign(static_cast<std::size_t>(cfg.m), 0.0);

    int row0 = 0;
    for (const int s : block_sizes) {
        init_block(state, row0, s, cfg, problem, rng);
        row0 += s;
    }
    state.refresh_gbest();
    return state;
}

SwarmState init_swarm(const InitConfig& cfg, const BenchmarkProblem& problem, Pcg64& rng)
{
    const int whole[] = {cfg.m};
    return init_swarm_blocks(cfg, whole, problem, rng);
}

std::uint64_t init_draw_count(const InitConfig& cfg, std::span<const int> block_sizes)
{
    std::uint64_t draws = 0;
    for (const int s : block_sizes) {
        const auto su = static_cast<std::uint64_t>(s);
        const auto nu = static_cast<std::uint64_t>(cfg.n);
        draws += static_cast<std::uint64_t>(cfg.lhs_candidates) * nu * (2 * su - 1);
        draws += su * nu; // pbest offset signs
    }
    return draws;
}

} // namespace swarmtopo
