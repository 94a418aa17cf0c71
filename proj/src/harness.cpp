#include "swarmtopo/harness.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmtopo {

namespace {

std::string slugify(std::string_view text)
{
    std::string out;
    for (const char c : text) {
        if (c == ':' || c == '=' || c == ',')
            out.push_back('-');
        else
            out.push_back(c);
    }
    return out;
}

struct RunPlan {
    BenchmarkProblem problem;
    Topology topology;
    SchemeSet schemes;
    RunSettings settings;
    std::vector<Pcg64> starts; // per-run boundary states of the one stream
};

RunPlan prepare(const ExperimentConfig& cfg, bool presplit)
{
    if (cfg.runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (cfg.T < 0) throw std::invalid_argument("steps must be non-negative");

    RunPlan plan;
    plan.problem = make_problem(cfg.problem, cfg.dims);
    plan.topology = validated(parse_topology(cfg.topology), cfg.m);
    plan.schemes = materialize(parse_scheme(cfg.scheme), cfg.m);

    plan.settings.m = cfg.m;
    plan.settings.T = cfg.T;
    plan.settings.lhs_candidates = cfg.lhs_candidates;
    plan.settings.t_ref = cfg.t_ref;
    if (cfg.checkpoints.empty()) {
        if (cfg.T >= 1000) plan.settings.checkpoints.push_back(1000);
    } else {
        for (const int c : cfg.checkpoints) {
            if (c < 1 || c > cfg.T)
                throw std::invalid_argument("checkpoints must lie within [1, T]");
            plan.settings.checkpoints.push_back(c);
        }
        std::sort(plan.settings.checkpoints.begin(), plan.settings.checkpoints.end());
    }

    if (presplit) {
        Pcg64 stream(cfg.seed);
        plan.starts.reserve(static_cast<std::size_t>(cfg.runs));
        for (int r = 0; r < cfg.runs; ++r) {
            plan.starts.push_back(stream);
            if (r + 1 < cfg.runs)
                advance_past_run(plan.problem, plan.topology, plan.schemes,
                                 plan.settings, stream);
        }
    }
    return plan;
}

ExperimentReport assemble(const ExperimentConfig& cfg,
                          std::vector<RunRecord>& records)
{
    ExperimentReport report;
    report.config = cfg;

    const std::size_t steps = static_cast<std::size_t>(cfg.T) + 1;
    report.curve.assign(steps, 0.0);
    for (const auto& rec : records)
        for (std::size_t t = 0; t < steps; ++t)
            report.curve[t] += rec.error_history[t];
    for (double& v : report.curve) v /= static_cast<double>(cfg.runs);

    report.thinned_histories.reserve(records.size());
    for (const auto& rec : records) {
        std::vector<double> thin;
        for (std::size_t t = 0; t < steps; t += static_cast<std::size_t>(report.thin_stride))
            thin.push_back(rec.error_history[t]);
        if ((steps - 1) % static_cast<std::size_t>(report.thin_stride) != 0)
            thin.push_back(rec.error_history[steps - 1]);
        report.thinned_histories.push_back(std::move(thin));
    }

    const auto& first = records.front();
    for (std::size_t c = 0; c < first.checkpoint_error.size(); ++c) {
        CheckpointStats stats;
        stats.step = first.checkpoint_error[c].first;
        for (const auto& rec : records) {
            stats.errors.push_back(rec.checkpoint_error[c].second);
            stats.pb_mes.push_back(rec.checkpoint_pb_me[c].second);
        }
        stats.summary = summarize(stats.errors, stats.pb_mes);
        report.checkpoints.push_back(std::move(stats));
    }
    return report;
}

} // namespace

std::string ExperimentConfig::id() const
{
    return slugify(problem) + "-" + std::to_string(dims) + "d_" + slugify(scheme) +
           "_" + slugify(topology);
}

const CheckpointStats& ExperimentReport::at_step(int step) const
{
    for (const auto& stats : checkpoints)
        if (stats.step == step) return stats;
    throw std::out_of_range("no checkpoint at step " + std::to_string(step));
}

ExperimentReport run_experiment(const ExperimentConfig& cfg)
{
    RunPlan plan = prepare(cfg, true);
    std::vector<RunRecord> records(static_cast<std::size_t>(cfg.runs));

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.runs; ++r) {
        Pcg64 rng = plan.starts[static_cast<std::size_t>(r)];
        records[static_cast<std::size_t>(r)] =
            run(plan.problem, plan.topology, plan.schemes, plan.settings, rng);
    }
    return assemble(cfg, records);
}

ExperimentReport run_experiment_serial(const ExperimentConfig& cfg)
{
    RunPlan plan = prepare(cfg, false);
    std::vector<RunRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.runs));

    Pcg64 stream(cfg.seed);
    for (int r = 0; r < cfg.runs; ++r)
        records.push_back(
            run(plan.problem, plan.topology, plan.schemes, plan.settings, stream));
    return assemble(cfg, records);
}

std::vector<GridOutcome> run_grid(std::span<const ExperimentConfig> grid)
{
    if (grid.empty()) throw std::invalid_argument("empty experiment grid");
    std::vector<GridOutcome> outcomes(grid.size());
    const int count = static_cast<int>(grid.size());

#pragma omp parallel for schedule(dynamic)
    for (int e = 0; e < count; ++e) {
        auto& outcome = outcomes[static_cast<std::size_t>(e)];
        outcome.config = grid[static_cast<std::size_t>(e)];
        try {
            outcome.report = run_experiment(outcome.config);
        } catch (const std::exception& ex) {
            outcome.error = ex.what();
        }
    }
    return outcomes;
}

std::vector<ExperimentConfig> paper_grid(std::uint64_t seed)
{
    static const char* problems[] = {"sphere", "rosenbrock", "rastrigin",
                                     "griewank", "schaffer-f6"};
    static const int dims[] = {2, 10, 30};
    static const char* schemes[] = {"pso-rrr2-1", "pso-rrr1-1", "c-pso-1",
                                    "multi-swarm"};
    static const char* topologies[] = {"global", "ring:nn=2",
                                       "ring-dynamic:nni=2,nnf=m-1", "wheel",
                                       "random"};
    std::vector<ExperimentConfig> grid;
    grid.reserve(300);
    for (const char* problem : problems)
        for (const int d : dims)
            for (const char* scheme : schemes)
                for (const char* topology : topologies) {
                    ExperimentConfig cfg;
                    cfg.problem = problem;
                    cfg.dims = d;
                    cfg.scheme = scheme;
                    cfg.topology = topology;
                    cfg.seed = seed;
                    grid.push_back(std::move(cfg));
                }
    return grid;
}

} // namespace swarmtopo
