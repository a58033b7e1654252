#pragma once

#include <stdexcept>
#include <string>

namespace gcs {

// Violated caller contract (bad preset data, invalid box, parabolic where
// hyperbolic required, ...).  CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical degeneracy: iteration caps, corner incidences, tangencies.
// CLI maps this to exit code 3.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcs
