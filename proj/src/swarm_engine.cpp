#include "swarmtopo/swarm_engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "swarmtopo/metrics.hpp"

namespace swarmtopo {

std::vector<int> multi_swarm_assign(int m, int scheme_count)
{
    if (m < 3) throw std::domain_error("swarm size must be at least 3");
    if (scheme_count < 1 || scheme_count > m)
        throw std::domain_error("scheme count must lie in [1, m]");
    std::vector<int> tags;
    tags.reserve(static_cast<std::size_t>(m));
    const int base = m / scheme_count;
    const int extra = m % scheme_count;
    for (int s = 0; s < scheme_count; ++s) {
        const int size = base + (s < extra ? 1 : 0);
        for (int k = 0; k < size; ++k) tags.push_back(s);
    }
    return tags;
}

SchemeSet materialize(const SchemeSpec& spec, int m, std::string* warning)
{
    SchemeSet set;
    std::string note;
    for (const auto& scheme : spec.members) {
        std::string w;
        set.resolved.push_back(resolve(scheme, &w));
        if (!w.empty()) note = w;
    }
    if (warning) *warning = note;
    set.tags = multi_swarm_assign(m, static_cast<int>(spec.members.size()));
    set.block_sizes.assign(spec.members.size(), 0);
    for (const int tag : set.tags) ++set.block_sizes[static_cast<std::size_t>(tag)];
    return set;
}

void step(SwarmState& state, const Topology& topo, const BenchmarkProblem& problem,
          const SchemeSet& schemes, int T, Pcg64& rng, StepScratch& scratch)
{
    const int m = state.m;
    const int n = state.n;

    // Move phase: every particle's new velocity uses the time-t personal
    // bests. Personal bests are untouched here, so updating x in place
    // is synchronous.
    for (int i = 0; i < m; ++i) {
        neighbours(topo, i, state.t, T, m, rng, scratch.set, scratch.pool);
        const int lb = lbest_index(scratch.set, state.pbest_conflict);
        const auto lbest = state.pbest(lb);
        const auto pb = state.pbest(i);
        const auto& rc = schemes.resolved[static_cast<std::size_t>(
            schemes.tags[static_cast<std::size_t>(i)])];
        auto x = state.position(i);
        auto v = state.velocity(i);
        for (int j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const auto [phi_i, phi_s] = sample_phi(rc, rng);
            v[jj] = rc.w * v[jj] + phi_i * (pb[jj] - x[jj]) + phi_s * (lbest[jj] - x[jj]);
            x[jj] += v[jj];
        }
    }

    // Evaluation phase: infeasible positions are skipped, strict
    // improvement replaces the personal best.
    for (int i = 0; i < m; ++i) {
        const auto x = state.position(i);
        if (!problem.feasible(x)) continue;
        const double f = conflict(problem, x);
        if (f < state.pbest_conflict[static_cast<std::size_t>(i)]) {
            state.pbest_conflict[static_cast<std::size_t>(i)] = f;
            auto pb = state.pbest(i);
            std::copy(x.begin(), x.end(), pb.begin());
        }
    }
    state.refresh_gbest();
    ++state.t;
}

void step(SwarmState& state, const Topology& topo, const BenchmarkProblem& problem,
          const SchemeSet& schemes, int T, Pcg64& rng)
{
    StepScratch scratch;
    step(state, topo, problem, schemes, T, rng, scratch);
}

namespace {

bool snapshot_needed(int t, const std::vector<int>& checkpoints, int t_ref)
{
    // needed when t falls inside (c - t_ref, c] for some checkpoint c
    const auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), t);
    return it != checkpoints.end() && *it - t_ref < t;
}

std::vector<int> checkpoint_steps(const RunSettings& s)
{
    std::vector<int> steps = s.checkpoints;
    steps.push_back(s.T);
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    for (const int c : steps)
        if (c < 0 || c > s.T)
            throw std::domain_error("checkpoints must lie within [0, T]");
    return steps;
}

} // namespace

RunRecord run(const BenchmarkProblem& problem, const Topology& topo,
              const SchemeSet& schemes, const RunSettings& settings, Pcg64& rng)
{
    if (settings.T < 0) throw std::domain_error("T must be non-negative");
    const Topology vtopo = validated(topo, settings.m);
    const std::vector<int> checkpoints = checkpoint_steps(settings);

    InitConfig icfg;
    icfg.m = settings.m;
    icfg.n = problem.n;
    icfg.lhs_candidates = settings.lhs_candidates;
    SwarmState state = init_swarm_blocks(icfg, schemes.block_sizes, problem, rng);
    state.scheme_tag = schemes.tags;

    RunRecord record;
    record.error_history.reserve(static_cast<std::size_t>(settings.T) + 1);
    record.error_history.push_back(error_of(problem, state.gbest_conflict));

    PbMeWindow window(settings.t_ref, settings.m, problem.n);
    const auto snapshot = [&] {
        if (snapshot_needed(state.t, checkpoints, settings.t_ref))
            window.push(state.x, state.pbest(state.gbest_index));
    };
    const auto record_checkpoint = [&] {
        if (std::binary_search(checkpoints.begin(), checkpoints.end(), state.t)) {
            record.checkpoint_error.emplace_back(
                state.t, error_of(problem, state.gbest_conflict));
            record.checkpoint_pb_me.emplace_back(
                state.t, pb_me(window, problem.lower, problem.upper));
        }
    };

    snapshot();
    record_checkpoint();

    StepScratch scratch;
    while (state.t < settings.T) {
        step(state, vtopo, problem, schemes, settings.T, rng, scratch);
        record.error_history.push_back(error_of(problem, state.gbest_conflict));
        snapshot();
        record_checkpoint();
    }
    return record;
}

void advance_past_run(const BenchmarkProblem& problem, const Topology& topo,
                      const SchemeSet& schemes, const RunSettings& settings,
                      Pcg64& rng)
{
    const Topology vtopo = validated(topo, settings.m);

    InitConfig icfg;
    icfg.m = settings.m;
    icfg.n = problem.n;
    icfg.lhs_candidates = settings.lhs_candidates;
    rng.advance(init_draw_count(icfg, schemes.block_sizes));

    const auto mu = static_cast<std::uint64_t>(settings.m);
    const auto phi_draws = 2 * static_cast<std::uint64_t>(problem.n);
    if (vtopo.kind != Topology::Kind::Random) {
        rng.advance(static_cast<std::uint64_t>(settings.T) * mu * phi_draws);
        return;
    }
    // Random topology interleaves a data-dependent number of neighbour
    // draws; replay just the counts.
    for (int t = 0; t < settings.T; ++t)
        for (int i = 0; i < settings.m; ++i) {
            const std::uint64_t k = 1 + rng.bounded(mu - 2);
            rng.advance(k + phi_draws);
        }
}

} // namespace swarmtopo
