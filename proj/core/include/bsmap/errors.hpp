#pragma once

#include <stdexcept>
#include <string>

namespace bsmap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// hyperbolic-core
struct PoleAtInput : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct DegenerateGeodesics : Error { using Error::Error; };

// polygon construction
struct IndexOutOfRange : Error { using Error::Error; };
struct NotDiskPreserving : Error { using Error::Error; };
struct OrderViolation : Error { using Error::Error; };
struct NoVertex : Error { using Error::Error; };

// Fenchel-Nielsen chart
struct OutOfDomain : Error { using Error::Error; };

// dynamics
struct AmbiguousExit : Error { using Error::Error; };
struct NotInDomain : Error { using Error::Error; };
struct MarkovViolation : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// solver
struct TargetOutOfRange : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };

// a named consistency check failed; carries the check name in what()
struct CheckFailure : Error { using Error::Error; };

}  // namespace bsmap
