#pragma once

#include <stdexcept>
#include <string>

namespace dqpt {

// Base for every library failure. Derived types map onto CLI exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lattice size outside the supported set (odd, too small).
class SizeDomainError : public Error {
public:
    using Error::Error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed argument (empty grid, non-monotone times, bad range).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Request would exceed the dense exact-diagonalization memory cap.
class ResourceGuardError : public Error {
public:
    using Error::Error;
};

// Ground state of the requested parity block is not unique.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

} // namespace dqpt
