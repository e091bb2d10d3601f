#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters that do not describe a valid (e, p, delta, charges) normal form.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// e <= 1: the deformation parameter must be a primitive e-th root of unity with e > 1.
class InvalidOrder : public InvalidParameters {
public:
    using InvalidParameters::InvalidParameters;
};

/// Charges not sorted or outside [0, e' - 1].
class InvalidCharge : public InvalidParameters {
public:
    using InvalidParameters::InvalidParameters;
};

/// Two entries of the parameter sequence Q coincide.
class DuplicateParameter : public InvalidParameters {
public:
    using InvalidParameters::InvalidParameters;
};

/// A multipartition with the wrong number of components was passed in.
class ComponentMismatch : public Error {
public:
    using Error::Error;
};

/// Explicit enumeration requested beyond the configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Two independent constructions of the same object disagree. Unreachable unless there is a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace cyclo
