#include "quvol/transition_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "quvol/errors.hpp"

namespace quvol {

KernelMatrix kernel_transition(const SigmaGrid& grid, double nu, double dt) {
    const std::size_t k = grid.size();
    if (k == 0) {
        throw InvalidArgument("kernel_transition: grid must be nonempty");
    }
    if (!(nu >= 0.0)) {
        throw InvalidArgument("kernel_transition: nu must be >= 0");
    }
    if (!(dt > 0.0)) {
        throw InvalidArgument("kernel_transition: dt must be positive");
    }

    KernelMatrix kernel;
    kernel.grid = grid;
    kernel.nu = nu;
    kernel.dt = dt;
    kernel.probs.assign(k * k, 0.0);
    kernel.row_cdf.assign(k * k, 0.0);

    if (nu == 0.0) {
        // Zero kinetic energy: the level never moves.
        for (std::size_t i = 0; i < k; ++i) {
            kernel.probs[i * k + i] = 1.0;
            for (std::size_t j = i; j < k; ++j) {
                kernel.row_cdf[i * k + j] = 1.0;
            }
        }
        return kernel;
    }

    const double inv_two_var = 1.0 / (2.0 * nu * nu * dt);
    for (std::size_t i = 0; i < k; ++i) {
        double* row = kernel.probs.data() + i * k;
        double row_sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double d = grid[j] - grid[i];
            // The largest exponent in the row is 0 (at j == i), so the
            // unnormalized weights are all in (0, 1] and cannot overflow.
            row[j] = std::exp(-d * d * inv_two_var);
            row_sum += row[j];
        }
        double* cdf = kernel.row_cdf.data() + i * k;
        double cum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            row[j] /= row_sum;
            cum += row[j];
            cdf[j] = cum;
        }
        // Pin the final cumulative value so sampling can never fall off the
        // end from accumulated rounding.
        cdf[k - 1] = 1.0;
    }
    return kernel;
}

std::size_t sample_kernel_row(const KernelMatrix& kernel, std::size_t row, double u) {
    const std::size_t k = kernel.size();
    if (row >= k) {
        throw InvalidArgument("sample_kernel_row: row index out of range");
    }
    if (!(u >= 0.0) || !(u < 1.0)) {
        throw InvalidArgument("sample_kernel_row: u must lie in [0, 1)");
    }
    const double* begin = kernel.row_cdf.data() + row * k;
    const double* end = begin + k;
    const double* it = std::upper_bound(begin, end, u);
    return (it == end) ? (k - 1) : static_cast<std::size_t>(it - begin);
}

} // namespace quvol
