#pragma once

#include <stdexcept>
#include <string>

namespace bellcoh {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2 (input error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPhysicalState : public Error {
public:
    using Error::Error;
};

class InvalidState : public Error {
public:
    using Error::Error;
};

// Raised when exact Bell-diagonal structure is demanded but the matrix
// deviates from its Bell-diagonal projection.
class NotBellDiagonal : public Error {
public:
    NotBellDiagonal(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class InvalidDistribution : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class InfiniteDivergence : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidBasis : public Error {
public:
    using Error::Error;
};

class NegativeTime : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bellcoh
