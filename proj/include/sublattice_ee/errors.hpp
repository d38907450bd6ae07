#pragma once

#include <stdexcept>
#include <string>

namespace sublattice {

// Failure of a numerical procedure on valid input: stalled eigensolver,
// non-convergent quadrature, unphysical spectra. Distinct from
// std::invalid_argument so callers (and the CLI exit-code mapping) can tell
// bad parameters from broken numerics.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sublattice
