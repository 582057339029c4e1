#include "quvol/moments.hpp"

#include <cmath>
#include <limits>

#include "quvol/errors.hpp"

namespace quvol {

namespace {

constexpr std::size_t kLeafSize = 32;

struct CenteredSums {
    double s2 = 0.0;
    double s4 = 0.0;
};

CenteredSums centered_sums(std::span<const double> xs, double mean) {
    if (xs.size() <= kLeafSize) {
        CenteredSums out;
        for (double x : xs) {
            const double d = x - mean;
            const double d2 = d * d;
            out.s2 += d2;
            out.s4 += d2 * d2;
        }
        return out;
    }
    const std::size_t half = xs.size() / 2;
    const CenteredSums left = centered_sums(xs.first(half), mean);
    const CenteredSums right = centered_sums(xs.subspan(half), mean);
    return {left.s2 + right.s2, left.s4 + right.s4};
}

} // namespace

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= kLeafSize) {
        double s = 0.0;
        for (double x : xs) {
            s += x;
        }
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

MomentSet compute_moments(std::span<const double> xs) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    MomentSet ms;
    ms.n = xs.size();
    ms.mean = kNaN;
    ms.m2 = kNaN;
    ms.m4 = kNaN;
    ms.relative_excess_kurtosis = kNaN;
    ms.conventional_excess_kurtosis = kNaN;
    if (xs.empty()) {
        return ms;
    }

    const double n = static_cast<double>(xs.size());
    ms.mean = pairwise_sum(xs) / n;
    const CenteredSums cs = centered_sums(xs, ms.mean);
    ms.m2 = cs.s2 / n;
    ms.m4 = cs.s4 / n;
    if (ms.m2 > 0.0) {
        const double ratio = ms.m4 / (ms.m2 * ms.m2);
        ms.relative_excess_kurtosis = ratio / 3.0 - 1.0;
        ms.conventional_excess_kurtosis = ratio - 3.0;
    }
    return ms;
}

double relative_excess_kurtosis(const MomentSet& moments) {
    if (moments.n < 4) {
        throw UndefinedStatisticError("relative_excess_kurtosis: need at least 4 samples");
    }
    if (!(moments.m2 > 0.0) || !std::isfinite(moments.m2)) {
        throw UndefinedStatisticError("relative_excess_kurtosis: variance must be positive");
    }
    return moments.relative_excess_kurtosis;
}

double relative_excess_kurtosis(std::span<const double> xs) {
    return relative_excess_kurtosis(compute_moments(xs));
}

} // namespace quvol
