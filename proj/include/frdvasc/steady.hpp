#pragma once

#include "frdvasc/grid.hpp"
#include "frdvasc/model.hpp"

namespace frd {

// Truncation of the odd double-sine series: only odd m, n <= m_max enter.
struct SeriesSpec {
    int m_max = 201;       // odd, >= 1
    double tail_tol = 1e-8; // advisory; the realized tail estimate is reported, not enforced

    void validate() const;
};

struct ResonanceCheck {
    bool ok = true;
    int m = 0;              // nearest resonant pair
    int n = 0;
    double distance = 0.0;  // |Lambda + (m^2+n^2) pi^2| at that pair
};

// Lambda = (2 a A0 - b beta) / (2 d A0).
double compute_lambda(const ModelParams& p);

// Scans odd pairs up to m_max for the nearest resonance Lambda = -(m^2+n^2) pi^2.
// ok iff the distance exceeds the guard band 1e-8 * pi^2.
ResonanceCheck check_resonance(double lambda, const SeriesSpec& spec);

// Throwing form of the check.
void ensure_no_resonance(double lambda, const SeriesSpec& spec);

// Truncated series for the equilibrium chemical field,
//   phi_hat = 8 b C / (d A0 pi^2) sum_mn sin(m pi x) sin(n pi y) / (mn [(m^2+n^2) pi^2 + Lambda]),
// summed smallest terms first (largest m+n band down to (1,1)).
// Boundary points return exactly 0.
double eval_phi_hat(double x, double y, double C_hat, double lambda,
                    const ModelParams& p, const SeriesSpec& spec);

// S = sum over odd m,n <= m_max of 1 / (m^2 n^2 [(m^2+n^2) pi^2 + Lambda]).
double mass_series_sum(double lambda, const SeriesSpec& spec);

// K = 16 b beta / (d A0^2 pi^4): the coefficient multiplying S in the mass
// constraint. Fixed against the quadrature oracle (see k_oracle); term-by-term
// integration of the density series gives 16, not the 4 one might expect from
// a hasty reading of the phi prefactor.
double mass_series_coefficient(const ModelParams& p);

// C_hat = total_mass / (K S + 1/(2 A0)). Throws ResonanceError or
// DegenerateDenominatorError (|denominator| < 1e-12/(2 A0)).
double solve_C_hat(double total_mass, const ModelParams& p, const SeriesSpec& spec);

// The assembled equilibrium (Dirichlet scenario). The implied velocity is zero.
struct SteadySolution {
    ModelParams params;
    SeriesSpec spec;
    double lambda = 0.0;
    double C_hat = 0.0;
    double total_mass = 0.0;
    ScalarField phi_hat;   // grid samples
    ScalarField rho_hat;   // = beta/(2 A0) phi_hat + C_hat/(2 A0), exact by construction
    double min_rho = 0.0;
    bool positivity_ok = true;  // min_rho > 0 on the sample grid
    double tail_estimate = 0.0; // sup-norm bound of the last included diagonal band

    double D_hat() const { return params.b * C_hat / (2.0 * params.d * params.A0); }
};

// rho_hat via the pointwise identity 2 A0 rho = beta phi + C (never via an
// independently derived series, so the identity holds exactly).
double eval_rho_hat(double x, double y, const SteadySolution& s);

SteadySolution build_steady(const ModelParams& p, double total_mass, const Grid& g,
                            const SeriesSpec& spec);

// Grid-sampled phi_hat (separable contraction; same values as eval_phi_hat up
// to summation order).
ScalarField sample_phi_hat(const ModelParams& p, double C_hat, double lambda,
                           const SeriesSpec& spec, const Grid& g);

// Constant equilibrium of the Neumann scenario: (mass, 0, (b/a) mass).
struct ConstantSteady {
    double rho = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double phi = 0.0;
};
ConstantSteady constant_steady(const ModelParams& p, double total_mass);

struct ResidualNorms {
    double helmholtz_l2 = 0.0;       // d lap_h phi - a phi + b rho, interior cells
    double helmholtz_l2_core = 0.0;  // same, cells at distance >= 0.1 from every corner
    double helmholtz_linf = 0.0;
    double momentum_l2 = 0.0;        // rho (2 A0 grad_h rho - beta grad_h phi)
};

ResidualNorms steady_residual(const SteadySolution& s);

// Composite-midpoint quadrature of the constructed rho_hat on an nq x nq grid.
double requadrature_mass(const ModelParams& p, double C_hat, const SeriesSpec& spec, int nq);

// Mass-series coefficient oracle: quadrature of the series part of rho_hat
// (unit C_hat) against the analytic K*S, plus the ratio against the
// alternative prefactor K/4.
struct KOracleReport {
    double quadrature = 0.0;
    double analytic = 0.0;        // K * S
    double analytic_alt = 0.0;    // (K/4) * S
    double rel_err = 0.0;         // |quadrature - analytic| / |analytic|
    double ratio_vs_alt = 0.0;    // quadrature / analytic_alt, ~4 when K is right
    double K = 0.0;
    double S = 0.0;
};
KOracleReport k_oracle(const ModelParams& p, const SeriesSpec& spec, int nq,
                       double k_scale = 1.0);

} // namespace frd
