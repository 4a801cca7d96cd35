#ifndef SPRINGNET_ERRORS_HPP
#define SPRINGNET_ERRORS_HPP

#include <stdexcept>

namespace springnet {

/// A time-step or parameter guard was violated (CLI exit code 3).
struct GuardViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The density lost positivity or a theorem assumption failed (exit code 4).
struct PositivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AssumptionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite state or a failed internal cross-check.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace springnet

#endif
