#pragma once

#include <cstddef>
#include <vector>

namespace quvol {

/// Uniformly spaced grid of admissible volatility levels.
///
/// The grid is the discrete spectrum of the volatility observable: every
/// regime draws sigma values from these K points and probability vectors
/// are always indexed against a grid of matching size.
struct SigmaGrid {
    std::vector<double> levels;

    std::size_t size() const { return levels.size(); }
    double operator[](std::size_t i) const { return levels[i]; }
};

/// Builds a grid of `k` equally spaced levels on [sigma_lo, sigma_hi].
/// Requires k >= 1, 0 < sigma_lo <= sigma_hi, and (for k == 1)
/// sigma_lo == sigma_hi.  Throws InvalidArgument otherwise.
SigmaGrid make_sigma_grid(double sigma_lo, double sigma_hi, std::size_t k);

} // namespace quvol
