#ifndef SWARMTOPO_METRICS_HPP
#define SWARMTOPO_METRICS_HPP

#include <span>
#include <vector>

namespace swarmtopo {

/// Ring buffer of the trailing (positions, gbest position) snapshots
/// feeding the position-based mean error. Holds at most t_ref entries;
/// older snapshots are evicted in arrival order.
class PbMeWindow {
public:
    PbMeWindow(int t_ref, int m, int n);

    void push(std::span<const double> positions, std::span<const double> gbest_position);

    int size() const { return static_cast<int>(count_ < capacity_ ? count_ : capacity_); }
    int t_ref() const { return static_cast<int>(capacity_); }
    int m() const { return m_; }
    int n() const { return n_; }

    std::span<const double> positions_at(int entry) const;
    std::span<const double> gbest_at(int entry) const;

private:
    std::size_t index_of(int entry) const;

    std::size_t capacity_;
    int m_;
    int n_;
    std::size_t count_ = 0;
    std::vector<std::vector<double>> positions_;
    std::vector<std::vector<double>> gbests_;
};

/// Position-based mean error over the buffered window: the mean over
/// buffered steps of the RMS (over particles and dimensions) of the
/// interval-normalized distance to that step's global best. When fewer
/// than t_ref snapshots exist the available window length is used.
/// Throws std::domain_error on an empty window or degenerate bounds.
double pb_me(const PbMeWindow& window, std::span<const double> lower,
             std::span<const double> upper);

/// Per-experiment statistics over a batch of runs at one checkpoint.
struct RunSummary {
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double mean_pb_me = 0.0;
    double success_rate = 0.0; // percent of runs with error <= threshold
};

/// Batch statistics: min / median / mean / max of the errors, the mean
/// pb_me, and the percentage of runs at or below the success threshold.
/// The median of an even count is the average of the two middle values.
RunSummary summarize(std::span<const double> errors, std::span<const double> pb_mes,
                     double threshold = 1e-4);

} // namespace swarmtopo

#endif
