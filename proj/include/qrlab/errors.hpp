#pragma once

#include <stdexcept>
#include <string>

namespace qrlab {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonHermitianInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DimensionOverflow : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class SolverNotConverged : public Error {
public:
    SolverNotConverged(const std::string& msg, double gap) : Error(msg), gap(gap) {}
    double gap;
};

class UnsupportedFreeSet : public Error {
public:
    using Error::Error;
};

// Input state is already free: the residual state of a robustness
// decomposition is undefined and callers must branch.
class FreeInput : public Error {
public:
    using Error::Error;
};

class FreeTarget : public Error {
public:
    using Error::Error;
};

class RateTooHigh : public Error {
public:
    using Error::Error;
};

class ZeroProbability : public Error {
public:
    using Error::Error;
};

} // namespace qrlab
