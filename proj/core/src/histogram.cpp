#include "quvol/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "quvol/errors.hpp"

namespace quvol {

Histogram make_histogram(std::span<const double> xs, std::size_t bins, double lo, double hi) {
    if (bins == 0) {
        throw InvalidArgument("make_histogram: need at least one bin");
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidArgument("make_histogram: need finite lo < hi");
    }

    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bins, 0);
    h.total = xs.size();

    const double scale = static_cast<double>(bins) / (hi - lo);
    const std::size_t last = bins - 1;
    for (double x : xs) {
        if (!std::isfinite(x)) {
            throw InvalidArgument("make_histogram: samples must be finite");
        }
        std::size_t idx;
        if (x <= lo) {
            idx = 0;
        } else if (x >= hi) {
            idx = last;
        } else {
            idx = std::min(last, static_cast<std::size_t>((x - lo) * scale));
        }
        ++h.counts[idx];
    }
    return h;
}

Histogram make_histogram(std::span<const double> xs, std::size_t bins) {
    if (xs.empty()) {
        throw InvalidArgument("make_histogram: cannot infer a range from an empty sample");
    }
    double lo = xs[0];
    double hi = xs[0];
    for (double x : xs) {
        if (!std::isfinite(x)) {
            throw InvalidArgument("make_histogram: samples must be finite");
        }
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    return make_histogram(xs, bins, lo, hi);
}

} // namespace quvol
