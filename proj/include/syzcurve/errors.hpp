#pragma once

#include <stdexcept>
#include <string>

namespace syzcurve {

// Base class for every failure the engine can report.  Each condition gets
// its own type so callers can catch exactly what they can handle; `what()`
// always carries a human-readable message with the offending data.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input / parsing ---
struct ParseError : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};
struct NotReduced : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
struct UnknownFamily : Error {
    using Error::Error;
};

// --- arithmetic / linear algebra ---
struct BadPrime : Error {
    using Error::Error;
};

// --- polynomial geometry ---
struct NotDivisible : Error {
    using Error::Error;
};
struct ZeroRestriction : Error {
    using Error::Error;
};
struct LineIsComponent : Error {
    using Error::Error;
};

// --- graded / syzygy analysis ---
struct NotStabilized : Error {
    using Error::Error;
};
struct SymmetryViolation : Error {
    using Error::Error;
};
struct UnimodalityViolation : Error {
    using Error::Error;
};
struct BoundTooSmall : Error {
    using Error::Error;
};
struct InconsistentProfile : Error {
    using Error::Error;
};
struct NotFree : Error {
    using Error::Error;
};

// --- local singularity analysis ---
struct PointNotOnCurve : Error {
    using Error::Error;
};
struct NonIsolated : Error {
    using Error::Error;
};
struct SharedComponent : Error {
    using Error::Error;
};

} // namespace syzcurve
