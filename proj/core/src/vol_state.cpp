#include "quvol/vol_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quvol/errors.hpp"
#include "quvol/normal.hpp"

namespace quvol {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Standardized band bounds: the band probability is Phi(hi) - Phi(lo).
/// Reflecting to a nonnegative midpoint keeps the difference of tail
/// values well conditioned on both sides of the origin.
struct Band {
    double lo;
    double hi;
};

Band standardized_band(double sigma, double dx, double t, double epsilon) {
    if (!(sigma > 0.0)) {
        throw InvalidArgument("gaussian_band_prob: sigma must be positive");
    }
    if (!(t > 0.0)) {
        throw InvalidArgument("gaussian_band_prob: t must be positive");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidArgument("gaussian_band_prob: epsilon must be positive");
    }
    const double scale = sigma * std::sqrt(t);
    double lo = (dx - epsilon) / scale;
    double hi = (dx + epsilon) / scale;
    if (lo + hi < 0.0) {
        const double t0 = lo;
        lo = -hi;
        hi = -t0;
    }
    return {lo, hi};
}

} // namespace

VolState max_entropy_state(const SigmaGrid& grid) {
    if (grid.size() == 0) {
        throw InvalidArgument("max_entropy_state: grid must be nonempty");
    }
    VolState state;
    state.grid = grid;
    state.weights.assign(grid.size(), 1.0 / static_cast<double>(grid.size()));
    return state;
}

void normalize_weights(std::span<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw DegeneratePosteriorError("normalize_weights: total weight is not positive and finite");
    }
    for (double& w : weights) {
        w /= total;
    }
}

VolState collapse_joint(const VolState& state, std::size_t k) {
    if (k >= state.weights.size()) {
        throw InvalidArgument("collapse_joint: index out of range");
    }
    if (!(state.weights[k] > 0.0)) {
        throw MeasurementError("collapse_joint: cannot collapse onto a zero-weight level");
    }
    VolState out;
    out.grid = state.grid;
    out.weights.assign(state.weights.size(), 0.0);
    out.weights[k] = 1.0;
    return out;
}

double gaussian_band_prob(double sigma, double dx, double t, double epsilon) {
    const Band b = standardized_band(sigma, dx, t, epsilon);
    const double p = 0.5 * (std::erfc(b.lo * kInvSqrt2) - std::erfc(b.hi * kInvSqrt2));
    return std::clamp(p, 0.0, 1.0);
}

double log_gaussian_band_prob(double sigma, double dx, double t, double epsilon) {
    const Band b = standardized_band(sigma, dx, t, epsilon);
    const double la = log_norm_cdf_upper(b.lo);
    const double lb = log_norm_cdf_upper(b.hi);
    // Phi(hi) - Phi(lo) written as the upper-tail mass lost between lo and
    // hi; la >= lb, and equality (band empty at machine precision) gives
    // -inf, which callers treat as zero likelihood.
    return la + std::log1p(-std::exp(lb - la));
}

VolState bayes_update(const VolState& state, double dx, double dt, double epsilon) {
    VolState out = state;
    bayes_update_in_place(out.weights, out.grid.levels, dx, dt, epsilon);
    return out;
}

void bayes_update_in_place(std::span<double> weights, std::span<const double> sigmas,
                           double dx, double dt, double epsilon) {
    if (weights.size() != sigmas.size() || weights.empty()) {
        throw InvalidArgument(
            "bayes_update: weights and volatility levels must have equal, nonzero size");
    }

    // Likelihoods go into a scratch buffer so the priors stay intact in
    // case the direct products all underflow and the update has to be
    // redone in log space.
    static thread_local std::vector<double> scratch;
    scratch.resize(weights.size());

    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        scratch[k] = gaussian_band_prob(sigmas[k], dx, dt, epsilon);
        total += weights[k] * scratch[k];
    }
    if (total > 0.0 && std::isfinite(total)) {
        for (std::size_t k = 0; k < weights.size(); ++k) {
            weights[k] = weights[k] * scratch[k] / total;
        }
        return;
    }

    // Log-space retry, shifted by the row maximum so the largest term
    // exponentiates to 1 instead of underflowing.
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    double max_log = kNegInf;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        scratch[k] = (weights[k] > 0.0)
                         ? std::log(weights[k]) + log_gaussian_band_prob(sigmas[k], dx, dt, epsilon)
                         : kNegInf;
        max_log = std::max(max_log, scratch[k]);
    }
    if (max_log == kNegInf) {
        throw DegeneratePosteriorError("bayes_update: posterior weights all vanished");
    }
    double shifted_total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        weights[k] = (scratch[k] == kNegInf) ? 0.0 : std::exp(scratch[k] - max_log);
        shifted_total += weights[k];
    }
    for (double& w : weights) {
        w /= shifted_total;
    }
}

std::size_t sample_index(std::span<const double> weights, double u) {
    if (weights.empty()) {
        throw InvalidArgument("sample_index: weights must be nonempty");
    }
    if (!(u >= 0.0) || !(u < 1.0)) {
        throw InvalidArgument("sample_index: u must lie in [0, 1)");
    }
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) {
            throw InvalidArgument("sample_index: weights must be finite and nonnegative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw InvalidArgument("sample_index: total weight must be positive");
    }
    const double target = u * total;
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] > 0.0) {
            last_positive = k;
        }
        cum += weights[k];
        if (cum > target) {
            return k;
        }
    }
    // Rounding pushed the cumulative sum fractionally below the target;
    // attribute the draw to the last level that carries mass.
    return last_positive;
}

} // namespace quvol
