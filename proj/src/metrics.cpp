#include "swarmtopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmtopo {

PbMeWindow::PbMeWindow(int t_ref, int m, int n)
    : capacity_(static_cast<std::size_t>(t_ref)), m_(m), n_(n)
{
    if (t_ref < 1) throw std::domain_error("t_ref must be positive");
    if (m < 1 || n < 1) throw std::domain_error("window needs m, n >= 1");
    positions_.resize(capacity_);
    gbests_.resize(capacity_);
}

void PbMeWindow::push(std::span<const double> positions,
                      std::span<const double> gbest_position)
{
    if (positions.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_) ||
        gbest_position.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("snapshot has wrong shape");
    const std::size_t slot = count_ % capacity_;
    positions_[slot].assign(positions.begin(), positions.end());
    gbests_[slot].assign(gbest_position.begin(), gbest_position.end());
    ++count_;
}

std::size_t PbMeWindow::index_of(int entry) const
{
    const auto held = static_cast<std::size_t>(size());
    if (entry < 0 || static_cast<std::size_t>(entry) >= held)
        throw std::out_of_range("window entry out of range");
    const std::size_t oldest = count_ <= capacity_ ? 0 : count_ % capacity_;
    return (oldest + static_cast<std::size_t>(entry)) % capacity_;
}

std::span<const double> PbMeWindow::positions_at(int entry) const
{
    return positions_[index_of(entry)];
}

std::span<const double> PbMeWindow::gbest_at(int entry) const
{
    return gbests_[index_of(entry)];
}

double pb_me(const PbMeWindow& window, std::span<const double> lower,
             std::span<const double> upper)
{
    const int held = window.size();
    if (held == 0) throw std::domain_error("pb_me needs a nonempty window");
    const int m = window.m();
    const int n = window.n();
    for (int j = 0; j < n; ++j)
        if (upper[static_cast<std::size_t>(j)] == lower[static_cast<std::size_t>(j)])
            throw std::domain_error("pb_me: degenerate feasible interval");

    double total = 0.0;
    for (int e = 0; e < held; ++e) {
        const auto xs = window.positions_at(e);
        const auto g = window.gbest_at(e);
        double sum = 0.0;
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < n; ++j) {
                const auto jj = static_cast<std::size_t>(j);
                const double d =
                    (xs[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + jj] -
                     g[jj]) /
                    (upper[jj] - lower[jj]);
                sum += d * d;
            }
        total += std::sqrt(sum / (static_cast<double>(m) * static_cast<double>(n)));
    }
    return total / static_cast<double>(held);
}

RunSummary summarize(std::span<const double> errors, std::span<const double> pb_mes,
                     double threshold)
{
    if (errors.empty()) throw std::invalid_argument("summarize: no runs");
    if (!pb_mes.empty() && pb_mes.size() != errors.size())
        throw std::invalid_argument("summarize: pb_me count mismatch");

    std::vector<double> sorted(errors.begin(), errors.end());
    std::sort(sorted.begin(), sorted.end());

    RunSummary s;
    s.best = sorted.front();
    s.worst = sorted.back();
    const std::size_t count = sorted.size();
    s.median = count % 2 != 0 ? sorted[count / 2]
                              : 0.5 * (sorted[count / 2 - 1] + sorted[count / 2]);

    // reduce in sorted order so the statistics are bitwise independent
    // of the input permutation
    double sum = 0.0;
    for (const double e : sorted) sum += e;
    s.mean = sum / static_cast<double>(count);

    std::size_t successes = 0;
    for (const double e : errors)
        if (e <= threshold) ++successes;
    s.success_rate = 100.0 * static_cast<double>(successes) / static_cast<double>(count);

    if (!pb_mes.empty()) {
        std::vector<double> psorted(pb_mes.begin(), pb_mes.end());
        std::sort(psorted.begin(), psorted.end());
        double psum = 0.0;
        for (const double p : psorted) psum += p;
        s.mean_pb_me = psum / static_cast<double>(pb_mes.size());
    }
    return s;
}

} // namespace swarmtopo
