#pragma once

#include <stdexcept>
#include <string>

namespace cubefree {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// LocalObstruction -> 2, OverflowRisk / PrecisionBudgetExceeded -> 3,
// everything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowRisk : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};
struct UnsupportedDegree : Error {
    using Error::Error;
};
struct RepeatedRoots : Error {
    using Error::Error;
};
struct LocalObstruction : Error {
    using Error::Error;
};
struct InvalidTarget : Error {
    using Error::Error;
};
struct FactorBudgetExceeded : Error {
    using Error::Error;
};
struct BadReduction : Error {
    using Error::Error;
};
struct InsufficientSample : Error {
    using Error::Error;
};
struct OffCurve : Error {
    using Error::Error;
};
struct TorsionPoint : Error {
    using Error::Error;
};
struct PrecisionBudgetExceeded : Error {
    using Error::Error;
};
struct UnsupportedAngle : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

}  // namespace cubefree
