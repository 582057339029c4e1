#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "quvol/analysis.hpp"
#include "quvol/bachelier.hpp"
#include "quvol/histogram.hpp"
#include "quvol/kbe.hpp"
#include "quvol/moments.hpp"
#include "quvol/path_ensemble.hpp"

namespace quvol {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Same, but NaN becomes the empty string: CSV consumers read an empty
/// field as a missing value.
std::string format_field(double v);

/// One data row: n,mean,variance,m4,rel_excess_kurt,conv_excess_kurt.
std::string moments_csv(const MomentSet& moments);

/// One row per bin: bin_lo,bin_hi,count.
std::string histogram_csv(const Histogram& histogram);

/// Histogram next to the averaged-equation Gaussian reference, one row per
/// bin: bin_lo,bin_hi,count,mc_density,gauss_density.  Densities are the
/// bin count normalized by total*width and the N(0, vbar*T) density at the
/// bin midpoint.
std::string compare_csv(const Histogram& histogram, double vbar, double t);

/// One row per step: step,e_above,e_below (missing values empty).
std::string trajectory_csv(const VolTrajectory& trajectory);

/// One row per strike: strike,price,implied_vol,status.
std::string surface_csv(std::span<const SurfacePoint> points);

/// The requested time slice, one row per node: x,u.
std::string pde_slice_csv(const PdeGrid& grid, std::size_t time_index);

/// Recorded volatility levels, one row per (path, step): path,step,sigma.
/// Requires the ensemble to have recorded vol paths.
std::string vol_paths_csv(const PathEnsemble& ensemble);

/// Whole-file write/read; failures raise Error with the path in the message.
void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

} // namespace quvol
