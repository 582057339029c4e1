#include "quvol/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quvol/errors.hpp"

namespace quvol {

double mixture_kurtosis_oracle(const VolState& state) {
    if (state.weights.empty() || state.weights.size() != state.grid.size()) {
        throw InvalidArgument("mixture_kurtosis_oracle: state weights and grid sizes must match");
    }
    double m2 = 0.0;
    double m4 = 0.0;
    for (std::size_t k = 0; k < state.weights.size(); ++k) {
        const double s2 = state.grid[k] * state.grid[k];
        m2 += state.weights[k] * s2;
        m4 += state.weights[k] * s2 * s2;
    }
    return m4 / (m2 * m2) - 1.0;
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw InvalidArgument("ks_statistic: both samples must be nonempty");
    }
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        // Advance through the smaller value (through ties in both samples
        // together) before comparing the CDFs, so ties never produce a
        // spurious gap.
        const double v = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == v) {
            ++i;
        }
        while (j < sb.size() && sb[j] == v) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

VolTrajectory conditional_vol_trajectory(const PathEnsemble& ensemble, double threshold) {
    if (!ensemble.has_vol_paths()) {
        throw InvalidArgument("conditional_vol_trajectory: ensemble has no recorded vol paths");
    }
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InvalidArgument("conditional_vol_trajectory: threshold must be positive and finite");
    }

    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    const std::size_t n_steps = ensemble.config.n_steps;
    const std::size_t n_paths = ensemble.n_paths();

    VolTrajectory traj;
    traj.e_above.assign(n_steps, kNaN);
    traj.e_below.assign(n_steps, kNaN);

    for (std::size_t s = 1; s < n_steps; ++s) {
        double sum_above = 0.0;
        double sum_below = 0.0;
        std::size_t n_above = 0;
        std::size_t n_below = 0;
        for (std::size_t p = 0; p < n_paths; ++p) {
            const double prev = ensemble.vol_at(p, s - 1);
            const double cur = ensemble.vol_at(p, s);
            if (prev > threshold) {
                sum_above += cur;
                ++n_above;
            } else if (prev < threshold) {
                sum_below += cur;
                ++n_below;
            }
            // prev == threshold: in neither class; dropped.
        }
        if (n_above > 0) {
            traj.e_above[s] = sum_above / static_cast<double>(n_above);
        }
        if (n_below > 0) {
            traj.e_below[s] = sum_below / static_cast<double>(n_below);
        }
    }
    return traj;
}

} // namespace quvol
