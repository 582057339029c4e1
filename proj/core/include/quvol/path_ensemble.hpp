#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quvol/sim_config.hpp"

namespace quvol {

/// Result of one Monte-Carlo run.  Paths start at price 0, so `terminal`
/// holds the accumulated price change of each path at the horizon.  When
/// requested, `vol_paths` records the volatility level used at every step,
/// laid out path-major: entry (p, s) lives at p * n_steps + s.  The draw
/// counters make the engine's random-number budget auditable per path.
struct PathEnsemble {
    SimConfig config;
    std::vector<double> terminal;
    std::vector<double> vol_paths;
    std::vector<std::uint64_t> gaussian_draws;
    std::vector<std::uint64_t> categorical_draws;

    std::size_t n_paths() const { return terminal.size(); }
    bool has_vol_paths() const { return !vol_paths.empty(); }
    double vol_at(std::size_t path, std::size_t step) const {
        return vol_paths[path * config.n_steps + step];
    }
};

} // namespace quvol
