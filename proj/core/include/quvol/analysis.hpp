#pragma once

#include <span>
#include <vector>

#include "quvol/path_ensemble.hpp"
#include "quvol/vol_state.hpp"

namespace quvol {

/// Closed-form relative excess kurtosis of the terminal distribution when
/// the volatility is drawn once per path from the given state and the
/// noise is Gaussian:  E[sigma^4] / E[sigma^2]^2 - 1.  Serves as the exact
/// reference the Monte-Carlo estimates are checked against.
double mixture_kurtosis_oracle(const VolState& state);

/// Two-sample Kolmogorov-Smirnov statistic: the largest absolute gap
/// between the two empirical CDFs.  Both samples must be nonempty.
double ks_statistic(std::span<const double> a, std::span<const double> b);

/// Conditional expected-volatility series.  Entry s holds the mean of the
/// step-s volatility over paths classified by the PREVIOUS step's level, so
/// entry 0 (no previous step) and entries whose conditional set is empty
/// are NaN, emitted downstream as missing values.
struct VolTrajectory {
    std::vector<double> e_above; ///< E[sigma_s | sigma_{s-1} > threshold]
    std::vector<double> e_below; ///< E[sigma_s | sigma_{s-1} < threshold]

    std::size_t steps() const { return e_above.size(); }
};

/// Computes the conditional series over a recorded ensemble.  Paths whose
/// previous-step level equals the threshold exactly belong to neither
/// class and are dropped for that step.  Requires recorded vol paths and a
/// positive finite threshold; throws InvalidArgument otherwise.
VolTrajectory conditional_vol_trajectory(const PathEnsemble& ensemble, double threshold);

} // namespace quvol
