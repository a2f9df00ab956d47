#pragma once

#include <stdexcept>
#include <string>

namespace bellmix {

/// Base class for all bellmix errors. Messages name the violated
/// invariant and, where applicable, the measured residual.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianError : Error {
    using Error::Error;
};

struct TraceNotOneError : Error {
    using Error::Error;
};

struct NotPositiveSemidefiniteError : Error {
    using Error::Error;
};

struct NonRealCorrelationError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidFamilyParameterError : Error {
    using Error::Error;
};

struct NoRealSolutionError : Error {
    using Error::Error;
};

struct OrderingViolatedError : Error {
    using Error::Error;
};

struct UnknownClaimError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace bellmix
