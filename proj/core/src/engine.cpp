#include "quvol/engine.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "quvol/errors.hpp"
#include "quvol/parallel.hpp"
#include "quvol/rng.hpp"
#include "quvol/sigma_grid.hpp"
#include "quvol/transition_kernel.hpp"
#include "quvol/vol_state.hpp"

namespace quvol {

namespace {

PathEnsemble make_ensemble_shell(const SimConfig& config) {
    PathEnsemble ens;
    ens.config = config;
    ens.terminal.assign(config.n_paths, 0.0);
    ens.gaussian_draws.assign(config.n_paths, 0);
    ens.categorical_draws.assign(config.n_paths, 0);
    if (config.record_vol_paths) {
        ens.vol_paths.assign(config.n_paths * config.n_steps, 0.0);
    }
    return ens;
}

void require_regime(const SimConfig& config, Regime expected) {
    validate(config);
    if (config.regime != expected) {
        throw InvalidArgument("regime: expected " + std::string(to_string(expected)) + ", got " +
                              std::string(to_string(config.regime)));
    }
}

} // namespace

double step_increment(double sigma, double z, double dt) {
    return sigma * z * std::sqrt(dt);
}

PathEnsemble simulate_case1(const SimConfig& config, std::size_t workers) {
    require_regime(config, Regime::Case1Fixed);

    const SigmaGrid grid = make_sigma_grid(config.sigma_lo, config.sigma_hi, config.k);
    const std::vector<double> prior(grid.size(), 1.0 / static_cast<double>(grid.size()));
    PathEnsemble ens = make_ensemble_shell(config);

    parallel_for(config.n_paths, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            PathRng rng(config.seed, p);
            const std::size_t k = sample_index(prior, rng.uniform01());
            const double sigma = grid[k];
            double x = 0.0;
            for (std::size_t s = 0; s < config.n_steps; ++s) {
                x += step_increment(sigma, rng.normal(), config.dt);
                if (config.record_vol_paths) {
                    ens.vol_paths[p * config.n_steps + s] = sigma;
                }
            }
            ens.terminal[p] = x;
            ens.gaussian_draws[p] = config.n_steps;
            ens.categorical_draws[p] = 1;
        }
    });
    return ens;
}

PathEnsemble simulate_case1_hamiltonian(const SimConfig& config, std::size_t workers) {
    require_regime(config, Regime::Case1Hamiltonian);

    const SigmaGrid grid = make_sigma_grid(config.sigma_lo, config.sigma_hi, config.k);
    const std::vector<double> prior(grid.size(), 1.0 / static_cast<double>(grid.size()));
    const KernelMatrix kernel = kernel_transition(grid, config.nu, config.dt);
    PathEnsemble ens = make_ensemble_shell(config);

    parallel_for(config.n_paths, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            PathRng rng(config.seed, p);
            std::size_t k = sample_index(prior, rng.uniform01());
            double x = 0.0;
            for (std::size_t s = 0; s < config.n_steps; ++s) {
                x += step_increment(grid[k], rng.normal(), config.dt);
                if (config.record_vol_paths) {
                    ens.vol_paths[p * config.n_steps + s] = grid[k];
                }
                // The level feeding the next step is re-drawn from the
                // kernel row of the current level; the last step has no
                // successor, so no draw happens there.
                if (s + 1 < config.n_steps) {
                    k = sample_kernel_row(kernel, k, rng.uniform01());
                }
            }
            ens.terminal[p] = x;
            ens.gaussian_draws[p] = config.n_steps;
            ens.categorical_draws[p] = config.n_steps;
        }
    });
    return ens;
}

PathEnsemble simulate_case2_bayes(const SimConfig& config, std::size_t workers) {
    require_regime(config, Regime::Case2Bayes);

    const SigmaGrid grid = make_sigma_grid(config.sigma_lo, config.sigma_hi, config.k);
    const double epsilon = config.effective_epsilon();
    PathEnsemble ens = make_ensemble_shell(config);

    parallel_for(config.n_paths, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<double> weights(grid.size());
        for (std::size_t p = begin; p < end; ++p) {
            weights.assign(grid.size(), 1.0 / static_cast<double>(grid.size()));
            PathRng rng(config.seed, p);
            double x = 0.0;
            for (std::size_t s = 0; s < config.n_steps; ++s) {
                const double z = rng.normal();
                const std::size_t k = sample_index(weights, rng.uniform01());
                const double dx = step_increment(grid[k], z, config.dt);
                x += dx;
                if (config.record_vol_paths) {
                    ens.vol_paths[p * config.n_steps + s] = grid[k];
                }
                bayes_update_in_place(weights, grid.levels, dx, config.dt, epsilon);
            }
            ens.terminal[p] = x;
            ens.gaussian_draws[p] = config.n_steps;
            ens.categorical_draws[p] = config.n_steps;
        }
    });
    return ens;
}

PathEnsemble simulate(const SimConfig& config, std::size_t workers) {
    switch (config.regime) {
    case Regime::Case1Fixed:
        return simulate_case1(config, workers);
    case Regime::Case1Hamiltonian:
        return simulate_case1_hamiltonian(config, workers);
    case Regime::Case2Bayes:
        return simulate_case2_bayes(config, workers);
    }
    throw InvalidArgument("regime: unrecognized value");
}

MomentSet ensemble_stats(const PathEnsemble& ensemble) {
    if (ensemble.n_paths() < 4) {
        throw InvalidArgument("ensemble_stats: need at least 4 paths");
    }
    return compute_moments(ensemble.terminal);
}

} // namespace quvol
