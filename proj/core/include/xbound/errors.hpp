#pragma once

#include <stdexcept>
#include <string>

namespace xbound {

/// Input exceeds a size guard. Guards can be raised with XBOUND_MAX_N.
class SizeGuardError : public std::invalid_argument {
public:
    explicit SizeGuardError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative solver stopped without reaching its tolerances.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result failed its re-verification check.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, double deviation)
        : std::runtime_error(what), deviation_(deviation) {}

    double deviation() const { return deviation_; }

private:
    double deviation_ = 0.0;
};

}  // namespace xbound
