#pragma once

#include <stdexcept>
#include <string>

namespace ramaseries {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside a function's mathematical domain (ln of a non-positive
// real, |z| >= 1 for arctanh, zeta below 2, index cap exceeded, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A series that has no finite value for the requested arguments.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// A tail strategy whose hypothesis failed its spot checks.
class StrategyMismatchError : public Error {
public:
    explicit StrategyMismatchError(const std::string& msg) : Error(msg) {}
};

// Catalog lookup with an id that does not exist.
class UnknownIdentityError : public Error {
public:
    explicit UnknownIdentityError(const std::string& msg) : Error(msg) {}
};

// Catalog parameters outside the identity's registered schema.
class ParamDomainError : public Error {
public:
    explicit ParamDomainError(const std::string& msg) : Error(msg) {}
};

} // namespace ramaseries
