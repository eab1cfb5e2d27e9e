#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values over different generator sets were combined.
struct DomainMismatchError : Error {
    using Error::Error;
};

/// A degree constraint was violated (inhomogeneous value, wrong target degree, ...).
struct DegreeError : Error {
    using Error::Error;
};

/// An operation refused its input because a precondition does not hold.
struct RefusalError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace sullivan
