#include "quvol/kbe.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "quvol/errors.hpp"
#include "quvol/normal.hpp"

namespace quvol {

namespace {

/// Thomas solver for a constant-coefficient tridiagonal system.  The
/// forward-elimination factors depend only on the matrix, so they are
/// computed once and reused for every time level.
class TridiagSolver {
public:
    TridiagSolver(double sub, double diag, double super, std::size_t n)
        : sub_(sub), cp_(n), inv_den_(n) {
        double den = diag;
        inv_den_[0] = 1.0 / den;
        cp_[0] = super * inv_den_[0];
        for (std::size_t i = 1; i < n; ++i) {
            den = diag - sub * cp_[i - 1];
            inv_den_[i] = 1.0 / den;
            cp_[i] = super * inv_den_[i];
        }
    }

    /// Solves in place: d holds the right-hand side on entry and the
    /// solution on return.
    void solve(std::span<double> d) const {
        const std::size_t n = cp_.size();
        d[0] *= inv_den_[0];
        for (std::size_t i = 1; i < n; ++i) {
            d[i] = (d[i] - sub_ * d[i - 1]) * inv_den_[i];
        }
        for (std::size_t i = n - 1; i-- > 0;) {
            d[i] -= cp_[i] * d[i + 1];
        }
    }

private:
    double sub_;
    std::vector<double> cp_;
    std::vector<double> inv_den_;
};

} // namespace

double mean_square_vol(const VolState& state) {
    if (state.weights.empty() || state.weights.size() != state.grid.size()) {
        throw InvalidArgument("mean_square_vol: state weights and grid sizes must match");
    }
    double v = 0.0;
    for (std::size_t k = 0; k < state.weights.size(); ++k) {
        v += state.weights[k] * state.grid[k] * state.grid[k];
    }
    return v;
}

double PdeGrid::value_at_t0(double x_query) const {
    const std::size_t m = x.size();
    if (x_query <= x.front()) {
        return u[0];
    }
    if (x_query >= x.back()) {
        return u[m - 1];
    }
    const double dx = (x.back() - x.front()) / static_cast<double>(m - 1);
    const std::size_t i =
        std::min(m - 2, static_cast<std::size_t>((x_query - x.front()) / dx));
    const double w = (x_query - x[i]) / (x[i + 1] - x[i]);
    return (1.0 - w) * u[i] + w * u[i + 1];
}

PdeGrid solve_kbe_vbar(double vbar, const std::function<double(double)>& payoff, double T,
                       const PdeGridSpec& spec) {
    if (!(vbar >= 0.0) || !std::isfinite(vbar)) {
        throw InvalidArgument("solve_kbe: vbar must be >= 0 and finite");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw InvalidArgument("solve_kbe: T must be positive and finite");
    }
    if (spec.x_nodes < 5) {
        throw InvalidArgument("x_nodes: need at least 5 (3 interior nodes)");
    }
    if (spec.t_nodes < 2) {
        throw InvalidArgument("t_nodes: need at least 2 time levels");
    }
    double halfwidth = spec.halfwidth;
    if (halfwidth <= 0.0) {
        halfwidth = 8.0 * std::sqrt(vbar * T);
    }
    if (!(halfwidth > 0.0) || !std::isfinite(halfwidth)) {
        throw InvalidArgument(
            "domain_halfwidth: must be positive (set it explicitly when vbar == 0)");
    }

    const std::size_t m = spec.x_nodes;
    const std::size_t n = spec.t_nodes;
    PdeGrid g;
    g.x.resize(m);
    g.t.resize(n);
    g.u.assign(m * n, 0.0);

    const double dx = 2.0 * halfwidth / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        g.x[i] = -halfwidth + dx * static_cast<double>(i);
    }
    g.x[m - 1] = halfwidth;
    const double dt = T / static_cast<double>(n - 1);
    for (std::size_t ti = 0; ti < n; ++ti) {
        g.t[ti] = dt * static_cast<double>(ti);
    }
    g.t[n - 1] = T;

    // Terminal condition.
    double* terminal = g.u.data() + (n - 1) * m;
    for (std::size_t i = 0; i < m; ++i) {
        terminal[i] = payoff(g.x[i]);
        if (!std::isfinite(terminal[i])) {
            throw InvalidArgument("solve_kbe: payoff must be finite on the grid");
        }
    }

    if (vbar == 0.0) {
        // No diffusion: the value function is constant in time.
        for (std::size_t ti = 0; ti + 1 < n; ++ti) {
            std::copy(terminal, terminal + m, g.u.data() + ti * m);
        }
        return g;
    }

    const double lo_bc = terminal[0];
    const double hi_bc = terminal[m - 1];
    const std::size_t n_int = m - 2;
    const double lambda = 0.5 * vbar * dt / (dx * dx);

    // Crank-Nicolson matrix and the implicit-Euler half-step matrix used
    // for the two startup levels next to maturity.
    const TridiagSolver cn(-0.5 * lambda, 1.0 + lambda, -0.5 * lambda, n_int);
    const double mu = 0.5 * lambda;
    const TridiagSolver half_implicit(-mu, 1.0 + 2.0 * mu, -mu, n_int);

    std::vector<double> rhs(n_int);
    std::vector<double> stage(m);

    for (std::size_t ti = n - 1; ti-- > 0;) {
        const double* prev = g.u.data() + (ti + 1) * m;
        double* cur = g.u.data() + ti * m;
        const bool startup = (ti + 1 == n - 1) || (ti + 2 == n - 1);

        if (startup) {
            // Two implicit half-steps: maturity-adjacent levels see the raw
            // payoff kink, and fully implicit stepping damps the modes that
            // Crank-Nicolson would let ring.
            std::copy(prev, prev + m, stage.data());
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < n_int; ++i) {
                    rhs[i] = stage[i + 1];
                }
                rhs[0] += mu * lo_bc;
                rhs[n_int - 1] += mu * hi_bc;
                half_implicit.solve(rhs);
                stage[0] = lo_bc;
                stage[m - 1] = hi_bc;
                std::copy(rhs.begin(), rhs.end(), stage.begin() + 1);
            }
            std::copy(stage.begin(), stage.end(), cur);
        } else {
            for (std::size_t i = 0; i < n_int; ++i) {
                const std::size_t xi = i + 1;
                rhs[i] = 0.5 * lambda * prev[xi - 1] + (1.0 - lambda) * prev[xi] +
                         0.5 * lambda * prev[xi + 1];
            }
            rhs[0] += 0.5 * lambda * lo_bc;
            rhs[n_int - 1] += 0.5 * lambda * hi_bc;
            cn.solve(rhs);
            cur[0] = lo_bc;
            cur[m - 1] = hi_bc;
            std::copy(rhs.begin(), rhs.end(), cur + 1);
        }
    }
    return g;
}

PdeGrid solve_kbe(const VolState& state, const std::function<double(double)>& payoff, double T,
                  const PdeGridSpec& spec) {
    return solve_kbe_vbar(mean_square_vol(state), payoff, T, spec);
}

double gaussian_density(double vbar, double T, double x) {
    if (!(vbar > 0.0)) {
        throw InvalidArgument("gaussian_density: vbar must be positive");
    }
    if (!(T > 0.0)) {
        throw InvalidArgument("gaussian_density: T must be positive");
    }
    const double s = std::sqrt(vbar * T);
    return norm_pdf(x / s) / s;
}

} // namespace quvol
