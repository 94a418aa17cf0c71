#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "swarmtopo/metrics.hpp"
#include "swarmtopo/swarm_engine.hpp"

#include "classical_reference.hpp"

using namespace swarmtopo;
using swarmtopo::testing::classical_reference_step;

namespace {

Topology ring2()
{
    Topology t;
    t.kind = Topology::Kind::Ring;
    t.nn = 2;
    return t;
}

Topology random_topo()
{
    Topology t;
    t.kind = Topology::Kind::Random;
    return t;
}

SchemeSet plain_scheme(const CoefficientScheme& scheme, int m)
{
    SchemeSpec spec;
    spec.members.push_back(scheme);
    return materialize(spec, m);
}

SchemeSet fixed_coefficients(double w, double phi_min, double phi_max, double ip, int m)
{
    SchemeSet set;
    set.resolved.push_back(ResolvedCoefficients::from_parts(w, phi_min, phi_max, ip));
    set.tags.assign(static_cast<std::size_t>(m), 0);
    set.block_sizes = {m};
    return set;
}

SwarmState uniform_state(int m, int n, double value, const BenchmarkProblem& problem)
{
    SwarmState s;
    s.m = m;
    s.n = n;
    const auto cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    s.x.assign(cells, value);
    s.v.assign(cells, 0.0);
    s.pbest_x.assign(cells, value);
    std::vector<double> point(static_cast<std::size_t>(n), value);
    s.pbest_conflict.assign(static_cast<std::size_t>(m), conflict(problem, point));
    s.scheme_tag.assign(static_cast<std::size_t>(m), 0);
    s.refresh_gbest();
    return s;
}

} // namespace

TEST_CASE("multi_swarm_assign splits as equally as possible")
{
    const auto tags50 = multi_swarm_assign(50, 3);
    std::vector<int> sizes(3, 0);
    for (const int t : tags50) ++sizes[static_cast<std::size_t>(t)];
    CHECK(sizes == std::vector<int>{17, 17, 16});
    // contiguous blocks
    CHECK(tags50[0] == 0);
    CHECK(tags50[16] == 0);
    CHECK(tags50[17] == 1);
    CHECK(tags50[33] == 1);
    CHECK(tags50[34] == 2);
    CHECK(tags50[49] == 2);

    CHECK(multi_swarm_assign(3, 3) == std::vector<int>{0, 1, 2});
    CHECK(multi_swarm_assign(7, 1) == std::vector<int>(7, 0));
    CHECK_THROWS_AS(multi_swarm_assign(2, 1), std::domain_error);
    CHECK_THROWS_AS(multi_swarm_assign(5, 6), std::domain_error);
}

TEST_CASE("materialize resolves the multi-swarm combination")
{
    const auto set = materialize(parse_scheme("multi-swarm"), 50);
    REQUIRE(set.resolved.size() == 3);
    CHECK(set.block_sizes == std::vector<int>{17, 17, 16});
    CHECK(set.tags.size() == 50);
    // rrr2-1, rrr1-1, c-pso-1 in that order
    CHECK(set.resolved[0].phi_min > 0.0);
    CHECK(set.resolved[1].w == 0.8);
    CHECK(set.resolved[2].phi_min == 0.0);
}

TEST_CASE("a stationary swarm is a fixed point of the step")
{
    const auto problem = make_problem("sphere", 2);
    for (const auto& topo : {Topology{}, ring2(), random_topo()}) {
        auto state = uniform_state(5, 2, 3.0, problem);
        const auto schemes = plain_scheme(preset_c_pso_1(), 5);
        Pcg64 rng(4);
        step(state, topo, problem, schemes, 10, rng);
        for (const double vj : state.v) CHECK(vj == 0.0);
        for (const double xj : state.x) CHECK(xj == 3.0);
        CHECK(state.t == 1);
    }
}

TEST_CASE("zero phi and unit inertia give pure drift")
{
    const auto problem = make_problem("sphere", 2);
    auto state = uniform_state(3, 2, 1.0, problem);
    state.v.assign(6, 0.25);
    const auto schemes = fixed_coefficients(1.0, 0.0, 0.0, 0.0, 3);
    Pcg64 rng(4);
    step(state, Topology{}, problem, schemes, 10, rng);
    for (const double vj : state.v) CHECK(vj == 0.25);
    for (const double xj : state.x) CHECK(xj == 1.25);
}

TEST_CASE("one hand-computed step on a tiny swarm")
{
    const auto problem = make_problem("sphere", 2);
    const int m = 3;
    SwarmState state;
    state.m = m;
    state.n = 2;
    state.x = {1.0, 2.0, -3.0, 0.5, 4.0, -1.0};
    state.v = {0.1, -0.2, 0.3, 0.0, -0.5, 0.25};
    state.pbest_x = {0.5, 1.0, -2.0, 1.0, 3.0, -0.5};
    state.pbest_conflict.resize(3);
    for (int i = 0; i < m; ++i)
        state.pbest_conflict[static_cast<std::size_t>(i)] =
            conflict(problem, state.pbest(i));
    state.scheme_tag.assign(3, 0);
    state.refresh_gbest();
    CHECK(state.gbest_index == 0); // conflicts: 1.25, 5, 9.25

    const auto rc = resolve(preset_rrr1_1());
    SchemeSet schemes;
    schemes.resolved = {rc};
    schemes.tags = {0, 0, 0};
    schemes.block_sizes = {3};

    // replay the exact uniforms the step will draw
    Pcg64 replay(2025);
    auto expected = state;
    for (int i = 0; i < m; ++i) {
        const auto pb = expected.pbest(i);
        const std::vector<double> lb{state.pbest_x[0], state.pbest_x[1]}; // gbest = 0
        for (int j = 0; j < 2; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const double u1 = replay.uniform01();
            const double u2 = replay.uniform01();
            const double phi_i = rc.ip * (rc.phi_min + (rc.phi_max - rc.phi_min) * u1);
            const double phi_s = rc.sp * (rc.phi_min + (rc.phi_max - rc.phi_min) * u2);
            auto x = expected.position(i);
            auto v = expected.velocity(i);
            v[jj] = rc.w * v[jj] + phi_i * (pb[jj] - x[jj]) + phi_s * (lb[jj] - x[jj]);
            x[jj] = x[jj] + v[jj];
        }
    }

    Pcg64 rng(2025);
    step(state, Topology{}, problem, schemes, 10, rng);

    for (std::size_t c = 0; c < 6; ++c) {
        CHECK(state.x[c] == doctest::Approx(expected.x[c]).epsilon(1e-12));
        CHECK(state.v[c] == doctest::Approx(expected.v[c]).epsilon(1e-12));
    }
    // personal bests follow strict improvement on the new positions
    for (int i = 0; i < m; ++i) {
        const double fx = conflict(problem, state.position(i));
        const double before = conflict(problem, expected.pbest(i));
        CHECK(state.pbest_conflict[static_cast<std::size_t>(i)] ==
              doctest::Approx(std::min(fx, before)).epsilon(1e-12));
    }
}

TEST_CASE("classical and reformulated stepping are bit-identical")
{
    const auto problem = make_problem("rastrigin", 3);
    InitConfig icfg;
    icfg.m = 6;
    icfg.n = 3;
    icfg.lhs_candidates = 5;

    for (const auto& topo : {Topology{}, ring2(), random_topo()}) {
        for (const std::uint64_t seed : {11ULL, 12ULL}) {
            // reformulated setting with phi_min = 0, mapped to classical
            // weights via iw = ip phi_max, sw = sp phi_max
            const auto rc = resolve(preset_c_pso_1());
            const double iw = rc.ip * rc.phi_max;
            const double sw = rc.sp * rc.phi_max;

            Pcg64 init_rng(seed);
            const auto start = init_swarm(icfg, problem, init_rng);

            auto canonical = start;
            canonical.scheme_tag.assign(6, 0);
            auto reference = canonical;
            SchemeSet schemes;
            schemes.resolved = {rc};
            schemes.tags = canonical.scheme_tag;
            schemes.block_sizes = {6};

            Pcg64 rng_a = init_rng;
            Pcg64 rng_b = init_rng;
            for (int t = 0; t < 100; ++t) {
                step(canonical, topo, problem, schemes, 100, rng_a);
                classical_reference_step(reference, topo, problem, rc.w, iw, sw, 100,
                                         rng_b);
            }
            REQUIRE(canonical.x == reference.x);
            REQUIRE(canonical.v == reference.v);
            REQUIRE(canonical.pbest_x == reference.pbest_x);
            REQUIRE(canonical.pbest_conflict == reference.pbest_conflict);
            REQUIRE(canonical.gbest_index == reference.gbest_index);
            REQUIRE(rng_a == rng_b);
        }
    }
}

TEST_CASE("gbest error history never increases")
{
    const auto problem = make_problem("griewank", 2);
    RunSettings settings;
    settings.m = 10;
    settings.T = 300;
    settings.lhs_candidates = 10;
    for (const auto& topo : {Topology{}, ring2(), random_topo()}) {
        const auto schemes = plain_scheme(preset_rrr2_1(), 10);
        Pcg64 rng(31);
        const auto record = run(problem, topo, schemes, settings, rng);
        REQUIRE(record.error_history.size() == 301);
        for (std::size_t t = 1; t < record.error_history.size(); ++t)
            REQUIRE(record.error_history[t] <= record.error_history[t - 1]);
    }
}

TEST_CASE("infeasible positions keep their pbest but keep moving")
{
    const auto problem = make_problem("sphere", 1);
    SwarmState state;
    state.m = 3;
    state.n = 1;
    state.x = {99.0, 0.0, 1.0};
    state.v = {5.0, 0.0, 0.0}; // particle 0 will leave [-100, 100]
    state.pbest_x = {99.0, 0.0, 1.0};
    state.pbest_conflict = {99.0 * 99.0, 0.0, 1.0};
    state.scheme_tag.assign(3, 0);
    state.refresh_gbest();

    // w = 1, phi = 0: drift only
    const auto schemes = fixed_coefficients(1.0, 0.0, 0.0, 0.0, 3);
    Pcg64 rng(8);
    step(state, Topology{}, problem, schemes, 10, rng);
    CHECK(state.x[0] == 104.0);
    CHECK(state.v[0] == 5.0);
    CHECK(state.pbest_conflict[0] == 99.0 * 99.0); // unevaluated, unchanged
    CHECK(state.pbest_x[0] == 99.0);

    step(state, Topology{}, problem, schemes, 10, rng);
    CHECK(state.x[0] == 109.0); // still moving
}

TEST_CASE("run with zero steps reports only the initialization")
{
    const auto problem = make_problem("sphere", 2);
    RunSettings settings;
    settings.m = 5;
    settings.T = 0;
    settings.lhs_candidates = 4;
    const auto schemes = plain_scheme(preset_c_pso_1(), 5);
    Pcg64 rng(17);
    const auto record = run(problem, Topology{}, schemes, settings, rng);
    CHECK(record.error_history.size() == 1);
    REQUIRE(record.checkpoint_error.size() == 1);
    CHECK(record.checkpoint_error[0].first == 0);
    CHECK(record.checkpoint_error[0].second == record.error_history[0]);
    CHECK(record.checkpoint_pb_me[0].second > 0.0);
}

TEST_CASE("runs are deterministic in (seed, config)")
{
    const auto problem = make_problem("rosenbrock", 2);
    RunSettings settings;
    settings.m = 8;
    settings.T = 150;
    settings.lhs_candidates = 6;
    settings.checkpoints = {50};
    const auto schemes = plain_scheme(preset_rrr1_1(), 8);
    Pcg64 a(99), b(99);
    const auto r1 = run(problem, random_topo(), schemes, settings, a);
    const auto r2 = run(problem, random_topo(), schemes, settings, b);
    CHECK(r1.error_history == r2.error_history);
    CHECK(r1.checkpoint_error == r2.checkpoint_error);
    CHECK(r1.checkpoint_pb_me == r2.checkpoint_pb_me);
    CHECK(a == b);
}

TEST_CASE("advance_past_run lands exactly on the post-run stream state")
{
    const auto problem = make_problem("rastrigin", 2);
    RunSettings settings;
    settings.m = 7;
    settings.T = 120;
    settings.lhs_candidates = 5;

    std::vector<Topology> topologies{Topology{}, ring2(), random_topo()};
    Topology dyn;
    dyn.kind = Topology::Kind::DynamicRing;
    topologies.push_back(dyn);
    Topology wh;
    wh.kind = Topology::Kind::Wheel;
    topologies.push_back(wh);

    for (const auto& topo : topologies) {
        for (const char* scheme : {"c-pso-1", "multi-swarm"}) {
            const auto schemes = materialize(parse_scheme(scheme), settings.m);
            Pcg64 consumed(1234), skipped(1234);
            run(problem, topo, schemes, settings, consumed);
            advance_past_run(problem, topo, schemes, settings, skipped);
            REQUIRE(consumed == skipped);
        }
    }
}

TEST_CASE("checkpoint pb_me equals an always-buffering replay")
{
    const auto problem = make_problem("sphere", 2);
    RunSettings settings;
    settings.m = 5;
    settings.T = 15;
    settings.t_ref = 4;
    settings.checkpoints = {10};
    settings.lhs_candidates = 4;
    const auto schemes = plain_scheme(preset_rrr2_1(), 5);

    Pcg64 rng(3);
    const auto record = run(problem, Topology{}, schemes, settings, rng);

    // replay the identical run, pushing every step into the window
    Pcg64 replay_rng(3);
    InitConfig icfg;
    icfg.m = 5;
    icfg.n = 2;
    icfg.lhs_candidates = 4;
    auto state = init_swarm(icfg, problem, replay_rng);
    state.scheme_tag = schemes.tags;
    PbMeWindow window(settings.t_ref, 5, 2);
    window.push(state.x, state.pbest(state.gbest_index));
    double pb10 = -1.0;
    for (int t = 0; t < 15; ++t) {
        step(state, Topology{}, problem, schemes, settings.T, replay_rng);
        window.push(state.x, state.pbest(state.gbest_index));
        if (state.t == 10) pb10 = pb_me(window, problem.lower, problem.upper);
    }
    const double pb15 = pb_me(window, problem.lower, problem.upper);

    REQUIRE(record.checkpoint_pb_me.size() == 2);
    CHECK(record.checkpoint_pb_me[0].first == 10);
    CHECK(record.checkpoint_pb_me[0].second == pb10);
    CHECK(record.checkpoint_pb_me[1].first == 15);
    CHECK(record.checkpoint_pb_me[1].second == pb15);
}
