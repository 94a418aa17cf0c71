// Times the OpenMP run loop against the serial reference on one
// experiment and checks that both produce the same numbers.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "swarmtopo/harness.hpp"
#include "swarmtopo/report_io.hpp"

using namespace swarmtopo;

namespace {

double time_once(const ExperimentConfig& cfg, bool serial, ExperimentReport& out)
{
    const auto start = std::chrono::steady_clock::now();
    out = serial ? run_experiment_serial(cfg) : run_experiment(cfg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

bool same_results(const ExperimentReport& a, const ExperimentReport& b)
{
    if (a.curve != b.curve) return false;
    if (a.checkpoints.size() != b.checkpoints.size()) return false;
    for (std::size_t c = 0; c < a.checkpoints.size(); ++c)
        if (a.checkpoints[c].errors != b.checkpoints[c].errors ||
            a.checkpoints[c].pb_mes != b.checkpoints[c].pb_mes)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP benchmark for one experiment"};
    ExperimentConfig cfg;
    cfg.problem = "rastrigin";
    cfg.dims = 10;
    cfg.scheme = "c-pso-1";
    cfg.topology = "ring-dynamic:nni=2,nnf=m-1";
    int threads = omp_get_max_threads();
    app.add_option("--problem", cfg.problem);
    app.add_option("--dims", cfg.dims);
    app.add_option("--topology", cfg.topology);
    app.add_option("--scheme", cfg.scheme);
    app.add_option("--steps", cfg.T);
    app.add_option("--runs", cfg.runs);
    app.add_option("--seed", cfg.seed);
    app.add_option("--threads", threads, "thread count for the parallel pass");
    CLI11_PARSE(app, argc, argv);

    std::cout << "experiment: " << cfg.id() << " (" << cfg.runs << " runs x " << cfg.T
              << " steps)\n";

    ExperimentReport serial_report;
    ExperimentReport parallel_report;
    omp_set_num_threads(1);
    const double serial_s = time_once(cfg, true, serial_report);
    omp_set_num_threads(threads);
    const double parallel_s = time_once(cfg, false, parallel_report);

    std::cout << "serial reference: " << serial_s << " s\n";
    std::cout << "openmp (" << threads << " threads): " << parallel_s << " s\n";
    std::cout << "speedup: " << serial_s / parallel_s << "x\n";

    if (!same_results(serial_report, parallel_report)) {
        std::cout << "MISMATCH: parallel results differ from the serial reference\n";
        return 1;
    }
    std::cout << "results identical\n";
    const auto& final = serial_report.final_checkpoint();
    std::cout << "final mean error " << sci3(final.summary.mean) << ", success "
              << final.summary.success_rate << "%\n";
    return 0;
}
