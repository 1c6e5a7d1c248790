#pragma once

#include <stdexcept>
#include <string>

namespace racah {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator (Pochhammer, b-factor, Gamma base) vanished where the
/// construction assumes generic parameters.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// A shift left the simplex with a nonzero coefficient. The coefficients
/// G_nu vanish on the boundary for valid operators, so this signals a
/// convention or genericity bug rather than a recoverable condition.
struct BoundaryError : Error {
    explicit BoundaryError(const std::string& what) : Error(what) {}
};

/// An index (operator offset, sigma shift, interval bound) left its range.
struct RangeError : Error {
    explicit RangeError(const std::string& what) : Error(what) {}
};

/// Matrix/grid shape mismatch.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A weight rational part is not strictly positive under the chosen
/// parameters; the gauge square roots would leave the real field.
struct SignError : Error {
    explicit SignError(const std::string& what) : Error(what) {}
};

/// A residual operator is not contained in the span required by the
/// presentation being verified.
struct StructureError : Error {
    explicit StructureError(const std::string& what) : Error(what) {}
};

/// Spectrum verification found extra or missing eigenvalues.
struct SpectrumMismatch : Error {
    explicit SpectrumMismatch(const std::string& what) : Error(what) {}
};

/// Invalid run configuration (non-generic parameters, bad flags, bad files).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace racah
