#pragma once

#include <stdexcept>
#include <string>

namespace secrelay {

/// A scenario parameter violates its domain; the message names the field.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Positive secrecy capacity is unattainable (relative path loss >= 1).
class InfeasibleSecrecy : public std::domain_error {
public:
    explicit InfeasibleSecrecy(const std::string& msg) : std::domain_error(msg) {}
};

/// Source power is zero: capacity is identically zero and an optimum is undefined.
class DegenerateSource : public std::domain_error {
public:
    explicit DegenerateSource(const std::string& msg) : std::domain_error(msg) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Sample count too small to resolve the requested outage quantile.
class InsufficientSamples : public std::invalid_argument {
public:
    explicit InsufficientSamples(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Bracketing found no point with a positive objective value.
class NoPositiveValue : public std::runtime_error {
public:
    explicit NoPositiveValue(const std::string& msg) : std::runtime_error(msg) {}
};

class MaxIterationsExceeded : public std::runtime_error {
public:
    explicit MaxIterationsExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace secrelay
