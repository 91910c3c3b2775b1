#pragma once

#include "frdvasc/grid.hpp"

namespace frd {

// Boundary closure for the second-order stencils. Reflection modes mirror the
// ghost value (even) or negate it (odd, zero face value); OneSided uses a
// biased second-order stencil and assumes nothing about the field.
enum class GhostMode { OneSided, DirichletOdd, NeumannEven };

VectorField gradient(const ScalarField& f, GhostMode mode);
ScalarField divergence(const VectorField& w, GhostMode mode = GhostMode::OneSided);
ScalarField curl2d(const VectorField& w, GhostMode mode = GhostMode::OneSided);

// 5-point Laplacian with reflection ghosts (OneSided is not meaningful here).
ScalarField laplacian(const ScalarField& f, GhostMode mode);

struct Norms {
    double l2 = 0.0;
    double h1 = 0.0;
    double linf = 0.0;
};

Norms field_norms(const ScalarField& f, GhostMode mode = GhostMode::OneSided);
Norms field_norms(const VectorField& w, GhostMode mode = GhostMode::OneSided);

double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& w);

// h^2 * sum(f), the composite midpoint rule over the unit square.
double integrate(const ScalarField& f);

} // namespace frd
