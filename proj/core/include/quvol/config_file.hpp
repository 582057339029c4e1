#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "quvol/sim_config.hpp"

namespace quvol {

/// Everything a run needs: the simulation settings plus the PDE grid
/// controls used by the pde/compare commands.  domain_halfwidth <= 0 means
/// "use the default of 8 terminal standard deviations".
struct RunSpec {
    SimConfig sim;
    std::size_t x_nodes = 2001;
    double domain_halfwidth = 0.0;
};

/// Parses flat key=value text.  Blank lines and lines starting with '#' are
/// skipped; keys are:
///   regime, K, sigma_lo, sigma_hi, nu, dt, n_steps, n_paths, epsilon,
///   seed, record_vol_paths, x_nodes, domain_halfwidth
/// Unknown keys, malformed lines, and unparsable values raise
/// InvalidArgument naming the key (or line) at fault.  Keys not present
/// keep their defaults.  The parsed spec is validated before returning.
RunSpec parse_config_text(std::string_view text);

/// Reads and parses a config file; errors name the path.
RunSpec load_config_file(const std::string& path);

/// Canonical text form: every key on its own line in the documented order.
/// parse_config_text(serialize_config(s)) reproduces s exactly.
std::string serialize_config(const RunSpec& spec);

} // namespace quvol
