#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "swarmtopo/benchmarks.hpp"
#include "swarmtopo/rng.hpp"

using namespace swarmtopo;

namespace {

std::vector<double> constant(int n, double v) { return std::vector<double>(n, v); }

double at(const BenchmarkProblem& p, std::vector<double> x) { return conflict(p, x); }

std::vector<double> random_point(const BenchmarkProblem& p, Pcg64& rng)
{
    std::vector<double> x(static_cast<std::size_t>(p.n));
    for (int j = 0; j < p.n; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        x[jj] = p.lower[jj] + rng.uniform01() * (p.upper[jj] - p.lower[jj]);
    }
    return x;
}

const char* kNames[] = {"sphere", "rosenbrock", "rastrigin", "griewank",
                        "schaffer-f6"};

} // namespace

TEST_CASE("known optima evaluate to zero")
{
    for (const int n : {2, 10, 30}) {
        CHECK(conflict(make_problem("sphere", n), constant(n, 0.0)) == 0.0);
        CHECK(conflict(make_problem("rastrigin", n), constant(n, 0.0)) == 0.0);
        CHECK(conflict(make_problem("griewank", n), constant(n, 0.0)) == 0.0);
        CHECK(conflict(make_problem("schaffer-f6", n), constant(n, 0.0)) == 0.0);
        CHECK(conflict(make_problem("rosenbrock", n), constant(n, 1.0)) == 0.0);
    }
}

TEST_CASE("hand-checked values")
{
    const auto sphere = make_problem("sphere", 3);
    CHECK(at(sphere, {1.0, 2.0, 3.0}) == 14.0);

    const auto rosen = make_problem("rosenbrock", 2);
    CHECK(at(rosen, {0.0, 0.0}) == 1.0);
    CHECK(at(rosen, {-1.0, 1.0}) == 4.0);

    const auto rast = make_problem("rastrigin", 1);
    CHECK(at(rast, {0.5}) == doctest::Approx(10.0 + 0.25 + 10.0).epsilon(1e-12));

    const auto grie = make_problem("griewank", 1);
    CHECK(at(grie, {std::numbers::pi_v<double> * 0.0}) == 0.0);
}

TEST_CASE("error is the conflict shifted by the known optimum")
{
    const auto p = make_problem("rosenbrock", 10);
    CHECK(error_of(p, 0.0) == 0.0);
    CHECK(error_of(p, 3.99) == 3.99);
    CHECK(error_of(make_problem("rastrigin", 10), 9.95e-1) == 9.95e-1);
}

TEST_CASE("conflicts are non-negative across the feasible domain")
{
    Pcg64 rng(314);
    for (const char* name : kNames) {
        const auto p = make_problem(name, 10);
        for (int s = 0; s < 200000; ++s)
            REQUIRE(conflict(p, random_point(p, rng)) >= 0.0);
    }
}

TEST_CASE("all but rosenbrock are even in every coordinate")
{
    Pcg64 rng(99);
    for (const char* name : {"sphere", "rastrigin", "griewank", "schaffer-f6"}) {
        const auto p = make_problem(name, 10);
        for (int s = 0; s < 1000; ++s) {
            auto x = random_point(p, rng);
            const double fx = conflict(p, x);
            for (auto& xj : x) xj = -xj;
            CHECK(conflict(p, x) == doctest::Approx(fx).epsilon(1e-12));
        }
    }
}

// The value ladder the trapped runs report: brute-force 1-D scans,
// independent of the implementation path.
TEST_CASE("rastrigin's first off-optimum well sits near 0.995")
{
    const auto p = make_problem("rastrigin", 1);
    double best = 1e300;
    for (double x = 0.5; x <= 1.5; x += 1e-5) {
        const double f = at(p, {x});
        if (f < best) best = f;
    }
    CHECK(std::abs(best - 0.995) <= 1e-2);
}

TEST_CASE("schaffer f6 ring minima match the reported levels")
{
    const auto p = make_problem("schaffer-f6", 1);
    const double levels[] = {9.72e-3, 3.72e-2, 7.82e-2};
    const double windows[][2] = {{2.6, 3.6}, {5.8, 6.8}, {9.0, 9.9}};
    for (int k = 0; k < 3; ++k) {
        double best = 1e300;
        for (double r = windows[k][0]; r <= windows[k][1]; r += 1e-5) {
            const double f = at(p, {r});
            if (f < best) best = f;
        }
        CHECK(std::abs(best - levels[k]) <= 1e-3);
    }

    // the radial generalization keeps those levels in higher dimensions
    const auto p10 = make_problem("schaffer-f6", 10);
    std::vector<double> x(10, 3.138484821601593 / std::sqrt(10.0));
    CHECK(conflict(p10, x) == doctest::Approx(9.716e-3).epsilon(1e-3));
}

TEST_CASE("dimension mismatch and unknown names are rejected")
{
    const auto p = make_problem("sphere", 3);
    CHECK_THROWS_AS(at(p, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("ackley", 2), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("sphere", 0), std::invalid_argument);
}

TEST_CASE("conventional feasible intervals")
{
    CHECK(make_problem("sphere", 2).upper[0] == 100.0);
    CHECK(make_problem("rosenbrock", 2).upper[0] == 30.0);
    CHECK(make_problem("rastrigin", 2).upper[0] == 5.12);
    CHECK(make_problem("griewank", 2).upper[0] == 600.0);
    CHECK(make_problem("schaffer-f6", 2).upper[0] == 100.0);
    for (const char* name : kNames) {
        const auto p = make_problem(name, 4);
        CHECK(p.lower[0] == -p.upper[0]);
        CHECK(p.optimum_conflict == 0.0);
        CHECK(problem_to_string(p.name) == name);
    }
}

TEST_CASE("feasibility is a componentwise interval check")
{
    const auto p = make_problem("rastrigin", 2);
    CHECK(p.feasible(std::vector<double>{0.0, 0.0}));
    CHECK(p.feasible(std::vector<double>{5.12, -5.12}));
    CHECK_FALSE(p.feasible(std::vector<double>{5.13, 0.0}));
    CHECK_FALSE(p.feasible(std::vector<double>{0.0, -5.121}));
}
