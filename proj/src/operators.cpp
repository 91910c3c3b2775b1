#include "frdvasc/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace frd {

namespace {

// d/dx along one row/column. Interior cells use the central stencil; the two
// boundary-adjacent cells use a second-order closure matching the mode:
//   OneSided      biased 3-point stencil, no boundary information assumed
//   DirichletOdd  quadratic through the zero face value
//   NeumannEven   quadratic with zero face derivative (= even-reflection central)
struct LineDeriv {
    GhostMode mode;
    double h;

    double lo(const double* f, std::ptrdiff_t s) const {
        switch (mode) {
            case GhostMode::OneSided: return (-3.0 * f[0] + 4.0 * f[s] - f[2 * s]) / (2.0 * h);
            case GhostMode::DirichletOdd: return (3.0 * f[0] + f[s]) / (3.0 * h);
            case GhostMode::NeumannEven: return (f[s] - f[0]) / (2.0 * h);
        }
        return 0.0;
    }
    double hi(const double* f, std::ptrdiff_t s) const {
        switch (mode) {
            case GhostMode::OneSided: return (3.0 * f[0] - 4.0 * f[-s] + f[-2 * s]) / (2.0 * h);
            case GhostMode::DirichletOdd: return -(3.0 * f[0] + f[-s]) / (3.0 * h);
            case GhostMode::NeumannEven: return (f[0] - f[-s]) / (2.0 * h);
        }
        return 0.0;
    }
    double mid(const double* f, std::ptrdiff_t s) const { return (f[s] - f[-s]) / (2.0 * h); }
};

void derivative_x(const ScalarField& f, ScalarField& out, GhostMode mode) {
    const int n = f.n();
    LineDeriv d{mode, f.h()};
    for (int j = 0; j < n; ++j) {
        const double* row = f.data() + static_cast<std::size_t>(j) * n;
        double* orow = out.data() + static_cast<std::size_t>(j) * n;
        orow[0] = d.lo(row, 1);
        for (int i = 1; i < n - 1; ++i) orow[i] = d.mid(row + i, 1);
        orow[n - 1] = d.hi(row + (n - 1), 1);
    }
}

void derivative_y(const ScalarField& f, ScalarField& out, GhostMode mode) {
    const int n = f.n();
    const std::ptrdiff_t s = n;
    LineDeriv d{mode, f.h()};
    for (int i = 0; i < n; ++i) {
        const double* col = f.data() + i;
        double* ocol = out.data() + i;
        ocol[0] = d.lo(col, s);
        for (int j = 1; j < n - 1; ++j) ocol[static_cast<std::size_t>(j) * n] = d.mid(col + j * s, s);
        ocol[static_cast<std::size_t>(n - 1) * n] = d.hi(col + (n - 1) * s, s);
    }
}

} // namespace

VectorField gradient(const ScalarField& f, GhostMode mode) {
    VectorField g(f.grid());
    derivative_x(f, g.u, mode);
    derivative_y(f, g.v, mode);
    return g;
}

ScalarField divergence(const VectorField& w, GhostMode mode) {
    ScalarField dudx(w.grid()), dvdy(w.grid());
    derivative_x(w.u, dudx, mode);
    derivative_y(w.v, dvdy, mode);
    dudx += dvdy;
    return dudx;
}

ScalarField curl2d(const VectorField& w, GhostMode mode) {
    ScalarField dvdx(w.grid()), dudy(w.grid());
    derivative_x(w.v, dvdx, mode);
    derivative_y(w.u, dudy, mode);
    dvdx -= dudy;
    return dvdx;
}

ScalarField laplacian(const ScalarField& f, GhostMode mode) {
    if (mode == GhostMode::OneSided)
        throw std::invalid_argument("laplacian: use a reflection mode (DirichletOdd or NeumannEven)");
    const int n = f.n();
    const double ih2 = 1.0 / (f.h() * f.h());
    // odd reflection: ghost = -cell; even reflection: ghost = +cell
    const double gs = (mode == GhostMode::DirichletOdd) ? -1.0 : 1.0;
    ScalarField out(f.grid());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double c = f(i, j);
            const double w = (i > 0) ? f(i - 1, j) : gs * c;
            const double e = (i < n - 1) ? f(i + 1, j) : gs * c;
            const double s = (j > 0) ? f(i, j - 1) : gs * c;
            const double nn = (j < n - 1) ? f(i, j + 1) : gs * c;
            out(i, j) = (w + e + s + nn - 4.0 * c) * ih2;
        }
    }
    return out;
}

double l2_norm(const ScalarField& f) {
    double s = 0.0;
    const double* p = f.data();
    for (std::size_t k = 0; k < f.size(); ++k) s += p[k] * p[k];
    return f.h() * std::sqrt(s);
}

double l2_norm(const VectorField& w) {
    const double a = l2_norm(w.u), b = l2_norm(w.v);
    return std::sqrt(a * a + b * b);
}

double integrate(const ScalarField& f) {
    double s = 0.0;
    const double* p = f.data();
    for (std::size_t k = 0; k < f.size(); ++k) s += p[k];
    return f.h() * f.h() * s;
}

Norms field_norms(const ScalarField& f, GhostMode mode) {
    Norms nm;
    nm.l2 = l2_norm(f);
    const VectorField g = gradient(f, mode);
    nm.h1 = std::sqrt(nm.l2 * nm.l2 + l2_norm(g.u) * l2_norm(g.u) + l2_norm(g.v) * l2_norm(g.v));
    nm.linf = f.max_abs();
    return nm;
}

Norms field_norms(const VectorField& w, GhostMode mode) {
    const Norms nu = field_norms(w.u, mode);
    const Norms nv = field_norms(w.v, mode);
    Norms nm;
    nm.l2 = std::sqrt(nu.l2 * nu.l2 + nv.l2 * nv.l2);
    nm.h1 = std::sqrt(nu.h1 * nu.h1 + nv.h1 * nv.h1);
    nm.linf = 0.0;
    for (std::size_t k = 0; k < w.u.size(); ++k) {
        const double m = std::hypot(w.u.data()[k], w.v.data()[k]);
        if (m > nm.linf) nm.linf = m;
    }
    return nm;
}

} // namespace frd
