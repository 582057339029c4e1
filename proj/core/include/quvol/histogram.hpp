#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quvol {

/// Uniform-bin histogram.  Values outside [lo, hi) are clamped into the
/// first/last bin so the counts always add up to the sample size, which
/// keeps tail mass visible instead of silently dropping it.
struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    std::size_t bins() const { return counts.size(); }
    double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
    double bin_lo(std::size_t i) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
    }
    double bin_hi(std::size_t i) const { return bin_lo(i + 1); }
};

/// Bins the samples over the explicit range [lo, hi).  Requires bins >= 1,
/// lo < hi, and finite samples; throws InvalidArgument otherwise.
Histogram make_histogram(std::span<const double> xs, std::size_t bins, double lo, double hi);

/// Same, with the range taken from the sample min/max (widened slightly for
/// a constant sample so the range stays nonempty).  Requires a nonempty
/// sample.
Histogram make_histogram(std::span<const double> xs, std::size_t bins);

} // namespace quvol
