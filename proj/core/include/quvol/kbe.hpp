#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "quvol/vol_state.hpp"

namespace quvol {

/// Weighted mean of sigma^2 over the state — the constant diffusion rate of
/// the averaged (partial-trace) backward equation.
double mean_square_vol(const VolState& state);

/// Solution of the averaged backward equation on a rectangular grid.
/// u is stored time-major: u[ti * x_nodes() + xi], with ti == 0 the t = 0
/// slice and the last ti the terminal payoff.
struct PdeGrid {
    std::vector<double> x;
    std::vector<double> t;
    std::vector<double> u;

    std::size_t x_nodes() const { return x.size(); }
    std::size_t t_nodes() const { return t.size(); }
    double at(std::size_t ti, std::size_t xi) const { return u[ti * x.size() + xi]; }

    /// u at t = 0 interpolated linearly in x (clamped to the domain).
    double value_at_t0(double x_query) const;
};

/// Spatial/temporal resolution for a solve.  halfwidth <= 0 selects the
/// default domain of 8 standard deviations of the terminal distribution.
struct PdeGridSpec {
    std::size_t x_nodes = 2001;
    std::size_t t_nodes = 2001;
    double halfwidth = 0.0;
};

/// Backward solve of  du/dt + (vbar/2) d^2u/dx^2 = 0  from u(T,.) = payoff
/// down to t = 0.  Crank-Nicolson time stepping with tridiagonal solves;
/// the first two steps are split into implicit half-steps to damp the
/// oscillations a kinked payoff otherwise injects.  Boundary values are
/// pinned to the payoff at the domain edges at all times.
///
/// Throws InvalidArgument for nonpositive T or vbar < 0, fewer than 3
/// interior x nodes, fewer than 2 time levels, or a payoff that is not
/// finite on the grid.
PdeGrid solve_kbe_vbar(double vbar, const std::function<double(double)>& payoff, double T,
                       const PdeGridSpec& spec);

/// Same, with the diffusion rate taken from the volatility state.
PdeGrid solve_kbe(const VolState& state, const std::function<double(double)>& payoff, double T,
                  const PdeGridSpec& spec);

/// Density of the averaged-equation terminal distribution N(0, vbar*T)
/// at x.  Requires vbar > 0 and T > 0.
double gaussian_density(double vbar, double T, double x);

} // namespace quvol
