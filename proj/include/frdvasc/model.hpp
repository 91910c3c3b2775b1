#pragma once

#include "frdvasc/errors.hpp"

namespace frd {

// Physical constants of the FRD system
//   rho_t + div(rho u) = 0
//   (rho u)_t + div(rho u x u) + grad P(rho) = -alpha rho u + beta rho grad phi
//   tau phi_t - d lap phi + a phi = b rho
// with P(rho) = A0 rho^gamma on the unit square.
struct ModelParams {
    double A0 = 1.0;     // pressure amplitude, > 0
    double gamma = 2.0;  // adiabatic exponent, >= 1
    double alpha = 1.0;  // damping rate, > 0
    double beta = 0.5;   // chemotactic sensitivity, any sign
    double tau = 0.0;    // relaxation time, >= 0
    double d = 10.0;     // chemical diffusion, > 0
    double a = 1.0;      // chemical degradation, > 0
    double b = 1.0;      // chemical secretion, > 0

    ModelParams() = default;
    ModelParams(double A0, double gamma, double alpha, double beta, double tau,
                double d, double a, double b)
        : A0(A0), gamma(gamma), alpha(alpha), beta(beta), tau(tau), d(d), a(a), b(b) {
        validate();
    }

    // Throws std::invalid_argument on the first violated constraint.
    void validate() const;
};

enum class PhiBC { Dirichlet, Neumann };

// Velocity always carries the no-normal-flow condition u.n = 0; only the
// chemical field's boundary condition is configurable.
struct BoundaryConfig {
    PhiBC phi_bc = PhiBC::Dirichlet;
};

// P(rho) = A0 rho^gamma. rho < 0 is a domain error.
double pressure(const ModelParams& p, double rho);

// Characteristic speed sqrt(P'(rho)) = sqrt(gamma A0 rho^(gamma-1)).
double sound_speed(const ModelParams& p, double rho);

// Sound-speed variable sigma = Afrak rho^kappa with Afrak = 2 sqrt(gamma A0)/(gamma-1),
// kappa = (gamma-1)/2; reduces to 2 sqrt(2 A0 rho) at gamma = 2.
// gamma = 1 has no such transform and throws UnsupportedTransformError.
double sigma_transform(const ModelParams& p, double rho);
double sigma_inverse(const ModelParams& p, double sigma);

struct PressureConditionResult {
    double margin = 0.0;     // b P'(rho_bar) - a alpha rho_bar
    bool satisfied = false;  // margin > 0
};

PressureConditionResult pressure_condition(const ModelParams& p, double rho_bar);

// Exact spatial mean of phi at time t when the mean of rho is constant:
//   mean phi(t) = (b/a) rho0_mean + (phi0_mean - (b/a) rho0_mean) exp(-(a/tau) t).
// tau = 0 returns the elliptic mean identity (b/a) rho0_mean for all t.
double mean_phi_exact(const ModelParams& p, double t, double rho0_mean, double phi0_mean);

} // namespace frd
