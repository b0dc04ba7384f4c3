#ifndef NULLSURF_ERRORS_HPP_
#define NULLSURF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nullsurf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// linalg
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct DegenerateSpan : Error {
  using Error::Error;
};

// structure
struct RiemannianSignature : Error {
  using Error::Error;
};

// hypersurface / frame construction
struct NotOnHypersurface : Error {
  using Error::Error;
};
struct NotLightlike : Error {
  using Error::Error;
};
struct PolicyFailure : Error {
  using Error::Error;
};
struct DegenerateScreen : Error {
  using Error::Error;
};

// classification
struct FrameInvalid : Error {
  using Error::Error;
};
struct InconsistentDecomposition : Error {
  using Error::Error;
};
struct DimensionTooSmall : Error {
  using Error::Error;
};

// induced structure
struct ZetaTangent : Error {
  using Error::Error;
};

// finite differences
struct EvaluationFailure : Error {
  using Error::Error;
};
struct PivotInstability : Error {
  using Error::Error;
};

// configuration / CLI
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nullsurf

#endif  // NULLSURF_ERRORS_HPP_
