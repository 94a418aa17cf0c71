#ifndef SWARMTOPO_BENCHMARKS_HPP
#define SWARMTOPO_BENCHMARKS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmtopo {

enum class ProblemName { Sphere, Rosenbrock, Rastrigin, Griewank, SchafferF6 };

/// A test problem: conflict function, dimensionality, per-coordinate
/// feasible intervals, and the known optimum conflict (0 for all five).
struct BenchmarkProblem {
    ProblemName name = ProblemName::Sphere;
    int n = 2;
    std::vector<double> lower;
    std::vector<double> upper;
    double optimum_conflict = 0.0;

    bool feasible(std::span<const double> x) const
    {
        for (int j = 0; j < n; ++j)
            if (x[static_cast<std::size_t>(j)] < lower[static_cast<std::size_t>(j)] ||
                x[static_cast<std::size_t>(j)] > upper[static_cast<std::size_t>(j)])
                return false;
        return true;
    }
};

/// Conflict value at x. x need not be feasible; callers enforce the
/// interval constraints. Throws std::invalid_argument on a length
/// mismatch.
double conflict(const BenchmarkProblem& p, std::span<const double> x);

/// conflict_value - optimum_conflict.
inline double error_of(const BenchmarkProblem& p, double conflict_value)
{
    return conflict_value - p.optimum_conflict;
}

/// Build a problem from its config string ("sphere", "rosenbrock",
/// "rastrigin", "griewank", "schaffer-f6") and dimensionality, with the
/// conventional feasible intervals. Bounds can be overridden afterwards.
BenchmarkProblem make_problem(std::string_view name, int dims);

std::string problem_to_string(ProblemName name);

} // namespace swarmtopo

#endif
