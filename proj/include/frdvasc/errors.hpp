#pragma once

#include <stdexcept>
#include <string>

namespace frd {

// Steady-state construction failed because Lambda sits on (or too close to)
// a resonant value -(m^2+n^2)*pi^2 for odd m, n.
class ResonanceError : public std::runtime_error {
public:
    ResonanceError(int m, int n, double distance, const std::string& what)
        : std::runtime_error(what), m(m), n(n), distance(distance) {}
    int m;
    int n;
    double distance;
};

// The mass-constraint denominator K*S + 1/(2*A0) is numerically zero.
class DegenerateDenominatorError : public std::runtime_error {
public:
    DegenerateDenominatorError(double denominator, const std::string& what)
        : std::runtime_error(what), denominator(denominator) {}
    double denominator;
};

// sigma transform requested at gamma = 1, where none exists.
class UnsupportedTransformError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Iterative linear solve did not reach the requested tolerance.
class SolveFailureError : public std::runtime_error {
public:
    SolveFailureError(double residual, int iterations, const std::string& what)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

// NaN/Inf detected in the evolving state.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(double t, const std::string& what)
        : std::runtime_error(what), t(t) {}
    double t;
};

// Decay fit requested on nonpositive samples or too few of them.
class FitDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or invalid run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace frd
