#include "quvol/sigma_grid.hpp"

#include "quvol/errors.hpp"

namespace quvol {

SigmaGrid make_sigma_grid(double sigma_lo, double sigma_hi, std::size_t k) {
    if (k == 0) {
        throw InvalidArgument("make_sigma_grid: grid must contain at least one level");
    }
    if (!(sigma_lo > 0.0)) {
        throw InvalidArgument("make_sigma_grid: sigma_lo must be positive");
    }
    if (!(sigma_hi >= sigma_lo)) {
        throw InvalidArgument("make_sigma_grid: sigma_hi must be >= sigma_lo");
    }
    if (k == 1 && sigma_hi != sigma_lo) {
        throw InvalidArgument("make_sigma_grid: a single-level grid needs sigma_lo == sigma_hi");
    }

    SigmaGrid grid;
    grid.levels.resize(k);
    if (k == 1) {
        grid.levels[0] = sigma_lo;
        return grid;
    }
    const double step = (sigma_hi - sigma_lo) / static_cast<double>(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        grid.levels[i] = sigma_lo + step * static_cast<double>(i);
    }
    // Pin the endpoint exactly; accumulated rounding must not leak outside
    // the configured range.
    grid.levels[k - 1] = sigma_hi;
    return grid;
}

} // namespace quvol
