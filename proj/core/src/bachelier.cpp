#include "quvol/bachelier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quvol/errors.hpp"
#include "quvol/moments.hpp"
#include "quvol/normal.hpp"

namespace quvol {

namespace {

constexpr double kVolFloor = 1e-8;
constexpr double kVolCeiling = 10.0;
constexpr int kBisectionIterations = 100;

} // namespace

double empirical_call_price(std::span<const double> samples, double strike) {
    if (samples.empty()) {
        throw InvalidArgument("empirical_call_price: samples must be nonempty");
    }
    // Fixed-tree reduction over the payoffs keeps the price bit-stable; the
    // payoff transform is applied up front so the tree shape matches
    // pairwise_sum's.
    std::vector<double> payoffs(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        payoffs[i] = std::max(samples[i] - strike, 0.0);
    }
    return pairwise_sum(payoffs) / static_cast<double>(payoffs.size());
}

double bachelier_call(double forward, double strike, double sigma_n, double t) {
    if (!(sigma_n > 0.0)) {
        throw InvalidArgument("bachelier_call: sigma_n must be positive");
    }
    if (!(t > 0.0)) {
        throw InvalidArgument("bachelier_call: t must be positive");
    }
    const double stdev = sigma_n * std::sqrt(t);
    const double d = (forward - strike) / stdev;
    return (forward - strike) * norm_cdf(d) + stdev * norm_pdf(d);
}

double implied_normal_vol(double price, double forward, double strike, double t) {
    if (!(t > 0.0)) {
        throw InvalidArgument("implied_normal_vol: t must be positive");
    }
    if (!std::isfinite(price)) {
        throw InvalidArgument("implied_normal_vol: price must be finite");
    }
    const double intrinsic = std::max(forward - strike, 0.0);
    if (price <= intrinsic) {
        throw NoSolutionError("implied_normal_vol: price is at or below intrinsic value");
    }
    if (price > bachelier_call(forward, strike, kVolCeiling, t)) {
        throw BracketError("implied_normal_vol: price exceeds the bisection ceiling vol of 10");
    }

    double lo = kVolFloor;
    double hi = kVolCeiling;
    for (int i = 0; i < kBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (bachelier_call(forward, strike, mid, t) < price) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::string_view to_string(InversionStatus status) {
    switch (status) {
    case InversionStatus::Ok:
        return "ok";
    case InversionStatus::NoSolution:
        return "no_solution";
    case InversionStatus::BracketError:
        return "bracket_error";
    }
    return "unknown";
}

std::vector<SurfacePoint> surface(const PathEnsemble& ensemble, std::span<const double> strikes) {
    if (strikes.empty()) {
        throw InvalidArgument("surface: strikes must be nonempty");
    }
    if (ensemble.terminal.empty()) {
        throw InvalidArgument("surface: ensemble has no paths");
    }
    const double horizon = ensemble.config.horizon();

    std::vector<SurfacePoint> points;
    points.reserve(strikes.size());
    for (double k : strikes) {
        SurfacePoint pt;
        pt.strike = k;
        pt.horizon = horizon;
        pt.call_price = empirical_call_price(ensemble.terminal, k);
        try {
            pt.implied_normal_vol = implied_normal_vol(pt.call_price, 0.0, k, horizon);
            pt.status = InversionStatus::Ok;
        } catch (const NoSolutionError&) {
            pt.implied_normal_vol = std::numeric_limits<double>::quiet_NaN();
            pt.status = InversionStatus::NoSolution;
        } catch (const BracketError&) {
            pt.implied_normal_vol = std::numeric_limits<double>::quiet_NaN();
            pt.status = InversionStatus::BracketError;
        }
        points.push_back(pt);
    }
    return points;
}

} // namespace quvol
