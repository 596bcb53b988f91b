#ifndef EUP_ERRORS_HPP
#define EUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |1 + mu| fell below the singularity floor somewhere on the contour.
struct SingularMomentum : Error {
  using Error::Error;
};

// PT reflection is only grid-representable on symmetric real-axis contours.
struct ContourNotReflectionInvariant : Error {
  using Error::Error;
};

// Sturm-Liouville assembly found complex coefficients on the chosen contour.
struct NonRealCoefficients : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

// Complex eigenvalues failed to pair into conjugates: solver bug or non-PT input.
struct PairingViolation : Error {
  using Error::Error;
};

struct BranchCutProximity : Error {
  using Error::Error;
};

struct NoQuadratureConvergence : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace eup

#endif
