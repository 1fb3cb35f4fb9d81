#pragma once

#include <stdexcept>

namespace gaussot {

// Error taxonomy shared by all modules. Conditions are named by what the
// caller violated, not by where the violation was detected.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveDefinite : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct UnphysicalState : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };
struct NotSymplectic : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct DivergentEntropy : Error { using Error::Error; };
struct DisplacedStateUnsupported : Error { using Error::Error; };
struct InfeasibleInput : Error { using Error::Error; };
struct NoFeasiblePoint : Error { using Error::Error; };

}  // namespace gaussot
