#include "quvol/sim_config.hpp"

#include <cmath>

#include "quvol/errors.hpp"
#include "quvol/sigma_grid.hpp"

namespace quvol {

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::Case1Fixed:
        return "case1-fixed";
    case Regime::Case1Hamiltonian:
        return "case1-hamiltonian";
    case Regime::Case2Bayes:
        return "case2-bayes";
    }
    return "unknown";
}

std::optional<Regime> parse_regime(std::string_view text) {
    if (text == "case1-fixed") {
        return Regime::Case1Fixed;
    }
    if (text == "case1-hamiltonian") {
        return Regime::Case1Hamiltonian;
    }
    if (text == "case2-bayes") {
        return Regime::Case2Bayes;
    }
    return std::nullopt;
}

double SimConfig::sigma_median() const {
    const SigmaGrid grid = make_sigma_grid(sigma_lo, sigma_hi, k);
    const std::size_t n = grid.size();
    if (n % 2 == 1) {
        return grid[n / 2];
    }
    return 0.5 * (grid[n / 2 - 1] + grid[n / 2]);
}

double SimConfig::effective_epsilon() const {
    if (epsilon > 0.0) {
        return epsilon;
    }
    return 0.1 * sigma_median() * std::sqrt(dt);
}

void validate(const SimConfig& config) {
    if (config.k == 0) {
        throw InvalidArgument("K: must be at least 1");
    }
    if (!(config.sigma_lo > 0.0) || !std::isfinite(config.sigma_lo)) {
        throw InvalidArgument("sigma_lo: must be positive and finite");
    }
    if (!(config.sigma_hi >= config.sigma_lo) || !std::isfinite(config.sigma_hi)) {
        throw InvalidArgument("sigma_hi: must be finite and >= sigma_lo");
    }
    if (config.k == 1 && config.sigma_lo != config.sigma_hi) {
        throw InvalidArgument("K: a single-level grid requires sigma_lo == sigma_hi");
    }
    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) {
        throw InvalidArgument("dt: must be positive and finite");
    }
    if (config.n_steps < 1) {
        throw InvalidArgument("n_steps: must be at least 1");
    }
    if (config.n_paths < 1) {
        throw InvalidArgument("n_paths: must be at least 1");
    }
    if (config.regime == Regime::Case1Hamiltonian) {
        if (!(config.nu >= 0.0) || !std::isfinite(config.nu)) {
            throw InvalidArgument("nu: must be >= 0 and finite for the case1-hamiltonian regime");
        }
    }
    if (config.regime == Regime::Case2Bayes) {
        if (std::isnan(config.epsilon) || config.epsilon < 0.0) {
            throw InvalidArgument("epsilon: must be positive, or 0 to use the default rule");
        }
    }
}

} // namespace quvol
