#pragma once

#include <cstddef>
#include <vector>

#include "quvol/sigma_grid.hpp"

namespace quvol {

/// Row-stochastic matrix of one-step volatility transition probabilities.
/// Entry (i, j) is the probability of moving from grid level i to level j
/// over one time step; rows[i*K + j] stores it row-major alongside a
/// per-row cumulative table used for inverse-CDF sampling.
struct KernelMatrix {
    SigmaGrid grid;
    double nu = 0.0;
    double dt = 0.0;
    std::vector<double> probs;
    std::vector<double> row_cdf;

    std::size_t size() const { return grid.size(); }
    double operator()(std::size_t i, std::size_t j) const { return probs[i * size() + j]; }
};

/// Builds the Gaussian transition kernel on the grid: the unnormalized
/// weight for i -> j is exp(-(sigma_j - sigma_i)^2 / (2 nu^2 dt)), and each
/// row is renormalized to sum to 1 (mass falling outside the grid range is
/// folded back by the normalization).  nu == 0 yields the identity matrix
/// exactly.  Throws InvalidArgument for an empty grid, nu < 0, or dt <= 0.
KernelMatrix kernel_transition(const SigmaGrid& grid, double nu, double dt);

/// Draws the next level from the given row with uniform variate u in
/// [0, 1): smallest j whose cumulative row mass strictly exceeds u.
std::size_t sample_kernel_row(const KernelMatrix& kernel, std::size_t row, double u);

} // namespace quvol
