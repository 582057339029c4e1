#pragma once

#include <stdexcept>

namespace quvol {

/// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated precondition or malformed configuration. The message names the
/// offending argument or config key.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Projective collapse onto a zero-probability outcome.
struct MeasurementError : Error {
    using Error::Error;
};

/// Bayes posterior whose likelihoods vanish even in log space.
struct DegeneratePosteriorError : Error {
    using Error::Error;
};

/// Statistic undefined on the given sample (e.g. zero variance).
struct UndefinedStatisticError : Error {
    using Error::Error;
};

/// Implied-vol inversion: price at or below the intrinsic value.
struct NoSolutionError : Error {
    using Error::Error;
};

/// Implied-vol inversion: price above the bracket ceiling.
struct BracketError : Error {
    using Error::Error;
};

} // namespace quvol
