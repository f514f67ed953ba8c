#pragma once

#include <stdexcept>
#include <string>

namespace qdhmc {

// Invalid configuration: bad ranges, unknown names, dimension mismatches.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values encountered while building or applying an evolution.
struct EvolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Leapfrog trajectory left the representable range.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series statistics on a constant series.
struct ZeroVarianceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series statistics on a series too short to estimate anything.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense-oracle construction refused: register too large for explicit matrices.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested output not supported (e.g. wavefunction snapshots above 2 dims).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdhmc
