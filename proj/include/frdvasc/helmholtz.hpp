#pragma once

#include "frdvasc/grid.hpp"
#include "frdvasc/model.hpp"

namespace frd {

struct LinearSolveConfig {
    double tol = 1e-10;      // relative residual target, > 0
    int max_iter = 20000;    // iteration cap
    bool precondition = true; // symmetric Gauss-Seidel inside CG

    void validate() const;
};

struct SolveStats {
    int iterations = 0;
    double rel_residual = 0.0;
};

// Solves (shift + a) phi - d lap_h phi = rhs by conjugate gradients on the
// SPD 5-point operator closed with reflection ghosts (odd for Dirichlet,
// even for Neumann). Requires d > 0 and a + shift > 0. An optional warm-start
// guess accelerates time-stepping; the convergence check is on the true
// residual, so the guess never weakens the result.
// Throws SolveFailureError if max_iter is exhausted.
ScalarField helmholtz_solve(const ScalarField& rhs, double d, double a, double shift,
                            PhiBC bc, const LinearSolveConfig& cfg = {},
                            SolveStats* stats = nullptr,
                            const ScalarField* guess = nullptr);

// One application of the operator above; used by tests to verify residuals
// independently of the iteration.
ScalarField helmholtz_apply(const ScalarField& f, double d, double a, double shift, PhiBC bc);

} // namespace frd
