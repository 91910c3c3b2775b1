#include "frdvasc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace frd {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("ModelParams: ") + msg);
}

void check_rho(double rho) {
    if (!(rho >= 0.0)) throw std::domain_error("negative density");
}

} // namespace

void ModelParams::validate() const {
    require(std::isfinite(A0) && A0 > 0.0, "A0 must be > 0");
    require(std::isfinite(gamma) && gamma >= 1.0, "gamma must be >= 1");
    require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    require(std::isfinite(beta), "beta must be finite");
    require(std::isfinite(tau) && tau >= 0.0, "tau must be >= 0");
    require(std::isfinite(d) && d > 0.0, "d must be > 0");
    require(std::isfinite(a) && a > 0.0, "a must be > 0");
    require(std::isfinite(b) && b > 0.0, "b must be > 0");
}

double pressure(const ModelParams& p, double rho) {
    check_rho(rho);
    return p.A0 * std::pow(rho, p.gamma);
}

double sound_speed(const ModelParams& p, double rho) {
    check_rho(rho);
    if (p.gamma == 1.0) return std::sqrt(p.A0);
    return std::sqrt(p.gamma * p.A0 * std::pow(rho, p.gamma - 1.0));
}

double sigma_transform(const ModelParams& p, double rho) {
    check_rho(rho);
    if (p.gamma == 1.0)
        throw UnsupportedTransformError("sigma transform undefined at gamma = 1");
    if (p.gamma == 2.0) return 2.0 * std::sqrt(2.0 * p.A0 * rho);
    const double afrak = 2.0 * std::sqrt(p.gamma * p.A0) / (p.gamma - 1.0);
    const double kappa = 0.5 * (p.gamma - 1.0);
    return afrak * std::pow(rho, kappa);
}

double sigma_inverse(const ModelParams& p, double sigma) {
    if (!(sigma >= 0.0)) throw std::domain_error("negative sigma");
    if (p.gamma == 1.0)
        throw UnsupportedTransformError("sigma transform undefined at gamma = 1");
    const double afrak = 2.0 * std::sqrt(p.gamma * p.A0) / (p.gamma - 1.0);
    const double kappa = 0.5 * (p.gamma - 1.0);
    return std::pow(sigma / afrak, 1.0 / kappa);
}

PressureConditionResult pressure_condition(const ModelParams& p, double rho_bar) {
    if (!(rho_bar > 0.0)) throw std::domain_error("pressure_condition: rho_bar must be > 0");
    const double dP = p.gamma * p.A0 * std::pow(rho_bar, p.gamma - 1.0);
    const double margin = p.b * dP - p.a * p.alpha * rho_bar;
    return {margin, margin > 0.0};
}

double mean_phi_exact(const ModelParams& p, double t, double rho0_mean, double phi0_mean) {
    const double limit = (p.b / p.a) * rho0_mean;
    if (p.tau == 0.0) return limit;
    if (!(t >= 0.0)) throw std::domain_error("mean_phi_exact: t must be >= 0");
    return limit + (phi0_mean - limit) * std::exp(-(p.a / p.tau) * t);
}

} // namespace frd
