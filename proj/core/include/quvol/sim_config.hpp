#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace quvol {

/// How the volatility state is measured along a path.
enum class Regime {
    Case1Fixed,       ///< one joint measurement: sigma drawn once, fixed per path
    Case1Hamiltonian, ///< sigma re-drawn each step through the Gaussian transition kernel
    Case2Bayes,       ///< price-only observation: sigma sampled from a Bayesian posterior
};

std::string_view to_string(Regime regime);
std::optional<Regime> parse_regime(std::string_view text);

/// Full description of one simulation experiment.
struct SimConfig {
    Regime regime = Regime::Case1Fixed;
    std::size_t k = 31;       ///< number of volatility grid levels
    double sigma_lo = 0.05;   ///< lowest grid level (annualized)
    double sigma_hi = 0.35;   ///< highest grid level (annualized)
    double nu = 0.0;          ///< vol-of-vol scale; used by the Hamiltonian regime only
    double dt = 0.004;        ///< years per step
    std::size_t n_steps = 20;
    std::size_t n_paths = 100000;
    double epsilon = 0.0;     ///< observation band half-width; 0 selects the default rule
    std::uint64_t seed = 0;
    bool record_vol_paths = false;

    double horizon() const { return dt * static_cast<double>(n_steps); }

    /// Median of the volatility grid levels.
    double sigma_median() const;

    /// Observation half-width actually used by the Bayesian regime: the
    /// configured epsilon when positive, otherwise 0.1 * sigma_median *
    /// sqrt(dt) — a band one tenth of a typical one-step move, narrow
    /// enough to be informative without starving the posterior.
    double effective_epsilon() const;
};

/// Checks every field against its admissible range.  Throws InvalidArgument
/// with a message that starts with the offending key name, so the CLI can
/// surface exactly which setting is wrong.
void validate(const SimConfig& config);

} // namespace quvol
