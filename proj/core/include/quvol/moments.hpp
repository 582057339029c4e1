#pragma once

#include <cstddef>
#include <span>

namespace quvol {

/// Sample moments of a terminal distribution.  m2 and m4 are population
/// central moments (divide by n).  The kurtosis fields are NaN whenever the
/// variance is zero or the sample is empty; callers that require a defined
/// value use relative_excess_kurtosis, which throws instead.
struct MomentSet {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m4 = 0.0;
    double relative_excess_kurtosis = 0.0;
    double conventional_excess_kurtosis = 0.0;
};

/// Sums in a fixed binary-tree order determined only by the length of the
/// input, so the result is bit-identical no matter how the data was
/// produced or how many workers computed it.
double pairwise_sum(std::span<const double> xs);

/// Mean and central moments via two fixed-tree passes.  Never throws on
/// degenerate data: an empty sample yields NaN fields, a constant sample
/// yields zero variance and NaN kurtosis.
MomentSet compute_moments(std::span<const double> xs);

/// Kurtosis of the sample relative to the Gaussian baseline:
/// m4 / (3 m2^2) - 1, which is 0 for a normal distribution.  Requires at
/// least 4 samples and positive variance; throws UndefinedStatisticError
/// otherwise.  The conventional m4/m2^2 - 3 variant is carried alongside in
/// the MomentSet so both readings of "excess" stay auditable.
double relative_excess_kurtosis(const MomentSet& moments);
double relative_excess_kurtosis(std::span<const double> xs);

} // namespace quvol
