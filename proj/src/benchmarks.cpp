#include "swarmtopo/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmtopo {

namespace {

double sphere(std::span<const double> x)
{
    double sum = 0.0;
    for (const double xj : x) sum += xj * xj;
    return sum;
}

double rosenbrock(std::span<const double> x)
{
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double a = x[j + 1] - x[j] * x[j];
        const double b = 1.0 - x[j];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x)
{
    double sum = 10.0 * static_cast<double>(x.size());
    for (const double xj : x)
        sum += xj * xj - 10.0 * std::cos(2.0 * std::numbers::pi * xj);
    return sum;
}

double griewank(std::span<const double> x)
{
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        sum += x[j] * x[j] / 4000.0;
        prod *= std::cos(x[j] / std::sqrt(static_cast<double>(j + 1)));
    }
    return 1.0 + sum - prod;
}

// Radial generalization: the 2-D function of r^2 = sum x_j^2, so the
// concentric-ring local minima keep the same values in any dimension.
double schaffer_f6(std::span<const double> x)
{
    double r2 = 0.0;
    for (const double xj : x) r2 += xj * xj;
    const double s = std::sin(std::sqrt(r2));
    const double d = 1.0 + 0.001 * r2;
    return 0.5 + (s * s - 0.5) / (d * d);
}

} // namespace

double conflict(const BenchmarkProblem& p, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != p.n)
        throw std::invalid_argument("conflict: point has wrong dimensionality");
    switch (p.name) {
    case ProblemName::Sphere: return sphere(x);
    case ProblemName::Rosenbrock: return rosenbrock(x);
    case ProblemName::Rastrigin: return rastrigin(x);
    case ProblemName::Griewank: return griewank(x);
    case ProblemName::SchafferF6: return schaffer_f6(x);
    }
    throw std::invalid_argument("conflict: unknown problem");
}

BenchmarkProblem make_problem(std::string_view name, int dims)
{
    if (dims < 1) throw std::invalid_argument("dims must be positive");
    BenchmarkProblem p;
    p.n = dims;
    double halfwidth = 0.0;
    if (name == "sphere") {
        p.name = ProblemName::Sphere;
        halfwidth = 100.0;
    } else if (name == "rosenbrock") {
        p.name = ProblemName::Rosenbrock;
        halfwidth = 30.0;
    } else if (name == "rastrigin") {
        p.name = ProblemName::Rastrigin;
        halfwidth = 5.12;
    } else if (name == "griewank") {
        p.name = ProblemName::Griewank;
        halfwidth = 600.0;
    } else if (name == "schaffer-f6") {
        p.name = ProblemName::SchafferF6;
        halfwidth = 100.0;
    } else {
        throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
    }
    p.lower.assign(static_cast<std::size_t>(dims), -halfwidth);
    p.upper.assign(static_cast<std::size_t>(dims), halfwidth);
    return p;
}

std::string problem_to_string(ProblemName name)
{
    switch (name) {
    case ProblemName::Sphere: return "sphere";
    case ProblemName::Rosenbrock: return "rosenbrock";
    case ProblemName::Rastrigin: return "rastrigin";
    case ProblemName::Griewank: return "griewank";
    case ProblemName::SchafferF6: return "schaffer-f6";
    }
    return "sphere";
}

} // namespace swarmtopo
