#pragma once

#include <cstddef>

#include "quvol/moments.hpp"
#include "quvol/path_ensemble.hpp"
#include "quvol/sim_config.hpp"

namespace quvol {

/// One-step arithmetic price change: sigma * z * sqrt(dt).
double step_increment(double sigma, double z, double dt);

/// Joint-measurement run: each path draws its volatility once from the
/// max-entropy state and keeps it for all steps.  Per path this consumes
/// exactly 1 categorical and n_steps Gaussian draws.
PathEnsemble simulate_case1(const SimConfig& config, std::size_t workers = 1);

/// Evolving-volatility run: the level is re-drawn after every step from
/// the Gaussian transition kernel row of the current level (no draw after
/// the final step).  Per path: n_steps categorical plus n_steps Gaussian
/// draws — the first categorical draw initializes the level from the
/// max-entropy state, the remaining n_steps - 1 step it forward.
PathEnsemble simulate_case1_hamiltonian(const SimConfig& config, std::size_t workers = 1);

/// Price-measurement run: the posterior starts uniform; each step draws
/// the noise z, samples a level from the current posterior, applies the
/// increment, then reweights the posterior by the probability that the
/// sampled-level Gaussian lands within epsilon of the observed increment.
/// Per path: n_steps categorical plus n_steps Gaussian draws.
PathEnsemble simulate_case2_bayes(const SimConfig& config, std::size_t workers = 1);

/// Dispatches on config.regime.
PathEnsemble simulate(const SimConfig& config, std::size_t workers = 1);

/// Moments of the terminal distribution, reduced in a fixed tree order so
/// the result does not depend on the worker count.  Requires at least 4
/// paths; throws InvalidArgument otherwise.
MomentSet ensemble_stats(const PathEnsemble& ensemble);

} // namespace quvol
