#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quvol/sigma_grid.hpp"

namespace quvol {

/// Probability weights over the volatility grid.  The pair (grid, weights)
/// is the full description of the uncertain-volatility state: weights[k] is
/// the probability that the volatility equals grid[k].
struct VolState {
    SigmaGrid grid;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

/// State with every grid level equally likely (weights all 1/K).
VolState max_entropy_state(const SigmaGrid& grid);

/// Rescales weights in place so they sum to 1.  Throws
/// DegeneratePosteriorError if the total mass is zero, negative, or not
/// finite: there is no distribution to renormalize to.
void normalize_weights(std::span<double> weights);

/// Projective collapse onto level k: the returned state is the delta
/// distribution at k.  Throws InvalidArgument for an out-of-range index and
/// MeasurementError when weights[k] == 0 (a zero-probability outcome cannot
/// be observed; treating it as one indicates a harness bug upstream).
VolState collapse_joint(const VolState& state, std::size_t k);

/// Probability that a centred Gaussian price change with variance sigma^2*t
/// lands within epsilon of dx:
///
///   P( dx - epsilon <= N(0, sigma^2 t) <= dx + epsilon )
///
/// Evaluated via complementary-error-function differences on whichever tail
/// keeps the subtraction well conditioned.  Throws InvalidArgument unless
/// sigma, t, and epsilon are all positive.
double gaussian_band_prob(double sigma, double dx, double t, double epsilon);

/// log of gaussian_band_prob, usable far into the tails where the plain
/// probability underflows to zero.  Returns -inf when the band carries no
/// mass at machine precision.
double log_gaussian_band_prob(double sigma, double dx, double t, double epsilon);

/// Bayesian filtering step: reweights each level by the probability that it
/// would have produced a price change within epsilon of the observed dx
/// over one step of length dt, then renormalizes.
///
/// If every product underflows to zero the update is retried in log space
/// (shifting by the row maximum before exponentiating); if the posterior is
/// still degenerate, DegeneratePosteriorError is thrown rather than
/// silently resetting the state, since a silent reset would bias the
/// terminal statistics.
VolState bayes_update(const VolState& state, double dx, double dt, double epsilon);

/// In-place variant of bayes_update for hot loops: weights are updated
/// against the provided volatility levels.  Same numerics and errors as the
/// value-returning form.
void bayes_update_in_place(std::span<double> weights, std::span<const double> sigmas,
                           double dx, double dt, double epsilon);

/// Inverse-CDF draw from a categorical distribution: returns the smallest
/// index whose cumulative weight strictly exceeds u * (total weight).
/// Requires 0 <= u < 1 and at least one positive weight.
std::size_t sample_index(std::span<const double> weights, double u);

} // namespace quvol
