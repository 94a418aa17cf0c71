#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "swarmtopo/config_file.hpp"
#include "swarmtopo/harness.hpp"
#include "swarmtopo/report_io.hpp"

namespace fs = std::filesystem;
using namespace swarmtopo;

namespace {

void apply_threads(int threads_flag)
{
    int threads = threads_flag;
    if (threads <= 0) {
        if (const char* env = std::getenv("SWARM_TOPO_THREADS"))
            threads = std::atoi(env);
    }
    if (threads > 0) omp_set_num_threads(threads);
}

int effective_threads()
{
    return omp_get_max_threads();
}

std::vector<ExperimentReport> load_reports(const std::vector<std::string>& inputs)
{
    std::vector<fs::path> files;
    for (const auto& input : inputs) {
        const fs::path path(input);
        if (fs::is_directory(path)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.path().extension() == ".json" &&
                    entry.path().filename() != "manifest.json")
                    found.push_back(entry.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(path);
        }
    }
    std::vector<ExperimentReport> reports;
    reports.reserve(files.size());
    for (const auto& file : files) reports.push_back(report_from_file(file));
    return reports;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int run_outcomes(std::vector<ExperimentConfig> grid, const std::string& out_dir,
                 bool print_table)
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<GridOutcome> outcomes = run_grid(grid);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<ExperimentReport> reports;
    int failures = 0;
    for (const auto& outcome : outcomes) {
        if (outcome.report) {
            reports.push_back(*outcome.report);
        } else {
            ++failures;
            std::cerr << "experiment " << outcome.config.id()
                      << " failed: " << outcome.error << "\n";
        }
    }

    if (print_table && !reports.empty()) std::cout << render_table(reports);
    if (!out_dir.empty()) {
        const auto files =
            write_output_bundle(outcomes, out_dir, wall, effective_threads());
        std::cerr << "wrote " << files.size() << " files to " << out_dir << " in "
                  << wall << " s\n";
    }
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"particle swarm optimizer with pluggable coefficient schemes and "
                 "neighbourhood topologies"};
    app.set_version_flag("--version", kArtifactVersion);
    app.require_subcommand(1);
    app.fallthrough(); // --threads may follow the subcommand

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: SWARM_TOPO_THREADS or all cores)");

    // run
    auto* run_cmd = app.add_subcommand("run", "run a single experiment");
    ExperimentConfig cfg;
    std::string run_out_dir;
    run_cmd->add_option("--problem", cfg.problem,
                        "sphere|rosenbrock|rastrigin|griewank|schaffer-f6");
    run_cmd->add_option("--dims", cfg.dims, "problem dimensionality");
    run_cmd->add_option("--topology", cfg.topology,
                        "global|ring:nn=K|ring-dynamic:nni=A,nnf=B|wheel|random");
    run_cmd->add_option("--scheme", cfg.scheme,
                        "c-pso-1|pso-rrr1-1|pso-rrr2-1|classical|multi-swarm");
    run_cmd->add_option("--swarm-size", cfg.m, "particles per swarm");
    run_cmd->add_option("--steps", cfg.T, "time-steps per run");
    run_cmd->add_option("--runs", cfg.runs, "runs per experiment");
    run_cmd->add_option("--seed", cfg.seed, "stream seed");
    run_cmd->add_option("--t-ref", cfg.t_ref, "clustering-average window length");
    run_cmd->add_option("--lhs-candidates", cfg.lhs_candidates,
                        "Latin hypercube candidates per initialization");
    run_cmd->add_option("--checkpoints", cfg.checkpoints,
                        "intermediate reporting steps (final step always reported)")
        ->delimiter(',');
    run_cmd->add_option("--out-dir", run_out_dir, "write the output bundle here");

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "run an experiment grid");
    std::string grid_source;
    std::string grid_out_dir;
    std::uint64_t grid_seed = 1;
    bool grid_seed_given = false;
    grid_cmd->add_option("source", grid_source,
                         "config file, or 'paper-grid' for the full factorial")
        ->required();
    grid_cmd->add_option("--out-dir", grid_out_dir, "write the output bundle here")
        ->required();
    grid_cmd->add_option("--seed", grid_seed, "seed for every experiment")
        ->each([&](const std::string&) { grid_seed_given = true; });

    // table
    auto* table_cmd = app.add_subcommand("table", "re-render stats tables from reports");
    std::vector<std::string> table_inputs;
    std::string table_out;
    table_cmd->add_option("reports", table_inputs, "report files or directories")
        ->required();
    table_cmd->add_option("--out", table_out, "output file (default: stdout)");

    // curves
    auto* curves_cmd =
        app.add_subcommand("curves", "export convergence curves from reports");
    std::vector<std::string> curves_inputs;
    std::string curves_out;
    curves_cmd->add_option("reports", curves_inputs, "report files or directories")
        ->required();
    curves_cmd->add_option("--out", curves_out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_threads(threads);
        if (*run_cmd) return run_outcomes({cfg}, run_out_dir, true);
        if (*grid_cmd) {
            std::vector<ExperimentConfig> grid;
            if (grid_source == "paper-grid") {
                grid = paper_grid(grid_seed);
            } else {
                grid = load_experiment_configs(grid_source);
                if (grid_seed_given)
                    for (auto& c : grid) c.seed = grid_seed;
            }
            return run_outcomes(std::move(grid), grid_out_dir, false);
        }
        if (*table_cmd) {
            emit(render_table(load_reports(table_inputs)), table_out);
            return 0;
        }
        if (*curves_cmd) {
            emit(render_curves(load_reports(curves_inputs)), curves_out);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
