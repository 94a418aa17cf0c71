#ifndef SWARMTOPO_SWARM_STATE_HPP
#define SWARMTOPO_SWARM_STATE_HPP

#include <limits>
#include <span>
#include <vector>

namespace swarmtopo {

/// Full state of one swarm at a time-step. Matrices are m x n, row-major.
/// Unevaluated (infeasible) personal bests carry conflict +inf.
struct SwarmState {
    int t = 0;
    int m = 0;
    int n = 0;
    std::vector<double> x;
    std::vector<double> v;
    std::vector<double> pbest_x;
    std::vector<double> pbest_conflict;
    std::vector<int> scheme_tag;
    int gbest_index = 0;
    double gbest_conflict = std::numeric_limits<double>::infinity();

    std::span<double> position(int i)
    {
        return {x.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }
    std::span<const double> position(int i) const
    {
        return {x.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }
    std::span<double> velocity(int i)
    {
        return {v.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }
    std::span<double> pbest(int i)
    {
        return {pbest_x.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }
    std::span<const double> pbest(int i) const
    {
        return {pbest_x.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }

    /// Lowest-index arg-min over pbest conflicts.
    void refresh_gbest()
    {
        gbest_index = 0;
        gbest_conflict = pbest_conflict.empty()
                             ? std::numeric_limits<double>::infinity()
                             : pbest_conflict[0];
        for (int i = 1; i < m; ++i) {
            if (pbest_conflict[static_cast<std::size_t>(i)] < gbest_conflict) {
                gbest_conflict = pbest_conflict[static_cast<std::size_t>(i)];
                gbest_index = i;
            }
        }
    }
};

} // namespace swarmtopo

#endif
