#pragma once

#include <stdexcept>
#include <string>

namespace shafer {

/// Argument outside the mathematical domain of an operation (x outside (0,1], non-finite alpha, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A denominator vanished (to working precision) for the requested (x, alpha).
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation requested for an alpha whose monotonicity regime does not support it.
class RegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shafer
