#pragma once

namespace quvol {

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF via erfc; accurate in both tails.
double norm_cdf(double x);

/// Upper tail log-probability log(1 - Phi(a)), stable for arbitrarily
/// large a (never -inf for finite a).
double log_norm_cdf_upper(double a);

/// Inverse of the standard normal CDF (Wichura's AS241, double precision).
/// Throws InvalidArgument unless p lies strictly inside (0,1).
double inverse_norm_cdf(double p);

} // namespace quvol
