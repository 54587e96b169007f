#pragma once

#include <stdexcept>
#include <string>

namespace uelc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unusable input data (parse errors, self-loops, bad ids).
class InputError : public Error {
public:
    using Error::Error;
};

/// Raised by the eigensolver; callers in fixed/fallback paths catch it.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DisconnectedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace uelc
