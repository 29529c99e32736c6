#pragma once

#include <stdexcept>
#include <string>

namespace sweyl {

/// Bad inputs: precondition violations, mismatched grids, unparseable specs.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical guard tripped (phase-ramp overflow, stability bound, NaN).
/// Not a bug in the inputs per se: the requested computation is outside the
/// regime the grid/precision can represent. The CLI maps this to exit code 3.
class NumericalGuardError : public std::runtime_error {
 public:
  explicit NumericalGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sweyl
