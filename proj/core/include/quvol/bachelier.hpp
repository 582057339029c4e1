#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "quvol/path_ensemble.hpp"

namespace quvol {

/// Monte-Carlo call price: mean of (x - strike)+ over the samples.
/// Requires a nonempty sample.
double empirical_call_price(std::span<const double> samples, double strike);

/// Normal-model (arithmetic Brownian) call price:
///   (F - K) * Phi(d) + sigma_n * sqrt(T) * phi(d),  d = (F - K) / (sigma_n * sqrt(T)).
/// Requires sigma_n > 0 and T > 0.
double bachelier_call(double forward, double strike, double sigma_n, double t);

/// Inverts bachelier_call for sigma_n by bisection on [1e-8, 10].  Throws
/// NoSolutionError when the price is at or below intrinsic value and
/// BracketError when it exceeds the price at the bracket ceiling.
double implied_normal_vol(double price, double forward, double strike, double t);

/// Outcome of one smile-point inversion.
enum class InversionStatus {
    Ok,
    NoSolution,  ///< price at or below intrinsic
    BracketError ///< price above the bisection ceiling
};

std::string_view to_string(InversionStatus status);

/// One point of an implied-volatility surface at a fixed horizon.
struct SurfacePoint {
    double strike = 0.0;
    double call_price = 0.0;
    double implied_normal_vol = 0.0; ///< NaN unless status == Ok
    double horizon = 0.0;
    InversionStatus status = InversionStatus::Ok;
};

/// Prices each strike off the ensemble's terminal sample (forward 0, the
/// paths' start value) and inverts to a normal implied vol.  Inversion
/// failures are recorded in the point's status instead of aborting the
/// surface.  Requires a nonempty strike list.
std::vector<SurfacePoint> surface(const PathEnsemble& ensemble, std::span<const double> strikes);

} // namespace quvol
