#include "frdvasc/helmholtz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "frdvasc/errors.hpp"
#include "frdvasc/parallel.hpp"

namespace frd {

void LinearSolveConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("LinearSolveConfig: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("LinearSolveConfig: max_iter must be >= 1");
}

namespace {

// A = (shift + a) I - (d/h^2) L, where L is the 5-point stencil closed by
// reflection. Off-diagonals are -d/h^2; the diagonal picks up (4 +/- k) with
// k missing faces (+ for odd/Dirichlet ghosts, - for even/Neumann).
struct Operator {
    int n;
    double diag0;   // shift + a + 4 d/h^2
    double off;     // d/h^2
    double corner_adj; // applied once per missing face
    const bool dirichlet;

    Operator(const Grid& g, double d, double a, double shift, PhiBC bc)
        : n(g.n),
          diag0(shift + a + 4.0 * d / (g.h * g.h)),
          off(d / (g.h * g.h)),
          corner_adj((bc == PhiBC::Dirichlet ? 1.0 : -1.0) * d / (g.h * g.h)),
          dirichlet(bc == PhiBC::Dirichlet) {}

    double diag(int i, int j) const {
        int k = (i == 0) + (i == n - 1) + (j == 0) + (j == n - 1);
        return diag0 + k * corner_adj;
    }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const int nn = n;
        parallel_for(nn, [&](int j0, int j1) {
            for (int j = j0; j < j1; ++j) {
                const std::size_t row = static_cast<std::size_t>(j) * nn;
                for (int i = 0; i < nn; ++i) {
                    double s = diag(i, j) * x[row + i];
                    if (i > 0) s -= off * x[row + i - 1];
                    if (i < nn - 1) s -= off * x[row + i + 1];
                    if (j > 0) s -= off * x[row - nn + i];
                    if (j < nn - 1) s -= off * x[row + nn + i];
                    y[row + i] = s;
                }
            }
        });
    }

    // Symmetric Gauss-Seidel: z = (D+U)^-1 D (D+L)^-1 r.
    void sgs(const std::vector<double>& r, std::vector<double>& z) const {
        const int nn = n;
        for (int j = 0; j < nn; ++j) {
            const std::size_t row = static_cast<std::size_t>(j) * nn;
            for (int i = 0; i < nn; ++i) {
                double s = r[row + i];
                if (i > 0) s += off * z[row + i - 1];
                if (j > 0) s += off * z[row - nn + i];
                z[row + i] = s / diag(i, j);
            }
        }
        for (int j = nn - 1; j >= 0; --j) {
            const std::size_t row = static_cast<std::size_t>(j) * nn;
            for (int i = nn - 1; i >= 0; --i) {
                double s = diag(i, j) * z[row + i];
                if (i < nn - 1) s += off * z[row + i + 1];
                if (j < nn - 1) s += off * z[row + nn + i];
                z[row + i] = s / diag(i, j);
            }
        }
    }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

} // namespace

ScalarField helmholtz_apply(const ScalarField& f, double d, double a, double shift, PhiBC bc) {
    Operator A(f.grid(), d, a, shift, bc);
    std::vector<double> x(f.data(), f.data() + f.size()), y(f.size());
    A.apply(x, y);
    ScalarField out(f.grid());
    std::copy(y.begin(), y.end(), out.data());
    return out;
}

ScalarField helmholtz_solve(const ScalarField& rhs, double d, double a, double shift,
                            PhiBC bc, const LinearSolveConfig& cfg, SolveStats* stats,
                            const ScalarField* guess) {
    cfg.validate();
    if (!(d > 0.0) || !(a + shift > 0.0))
        throw std::invalid_argument("helmholtz_solve: need d > 0 and a + shift > 0");

    const std::size_t N = rhs.size();
    double bnorm2 = 0.0;
    for (std::size_t k = 0; k < N; ++k) bnorm2 += rhs.data()[k] * rhs.data()[k];
    const double bnorm = std::sqrt(bnorm2);
    ScalarField out(rhs.grid());
    if (bnorm == 0.0) {
        if (stats) *stats = {0, 0.0};
        return out; // unique solution of the SPD system with zero rhs
    }

    Operator A(rhs.grid(), d, a, shift, bc);
    std::vector<double> x(N, 0.0);
    if (guess) {
        if (!(guess->grid() == rhs.grid()))
            throw std::invalid_argument("helmholtz_solve: guess grid mismatch");
        std::copy(guess->data(), guess->data() + N, x.begin());
    }

    std::vector<double> r(N), z(N), p(N), q(N);
    A.apply(x, r);
    for (std::size_t k = 0; k < N; ++k) r[k] = rhs.data()[k] - r[k];

    const double target = cfg.tol * bnorm;
    double rnorm = std::sqrt(dot(r, r));
    int it = 0;
    if (rnorm > target) {
        if (cfg.precondition) A.sgs(r, z); else z = r;
        p = z;
        double rz = dot(r, z);
        for (it = 1; it <= cfg.max_iter; ++it) {
            A.apply(p, q);
            const double pq = dot(p, q);
            const double alpha = rz / pq;
            for (std::size_t k = 0; k < N; ++k) x[k] += alpha * p[k];
            for (std::size_t k = 0; k < N; ++k) r[k] -= alpha * q[k];
            rnorm = std::sqrt(dot(r, r));
            if (rnorm <= target) break;
            if (cfg.precondition) A.sgs(r, z); else z = r;
            const double rz_new = dot(r, z);
            const double betac = rz_new / rz;
            rz = rz_new;
            for (std::size_t k = 0; k < N; ++k) p[k] = z[k] + betac * p[k];
        }
    }
    if (rnorm > target)
        throw SolveFailureError(rnorm / bnorm, cfg.max_iter,
                                "helmholtz_solve: CG stalled at relative residual " +
                                    std::to_string(rnorm / bnorm));
    if (stats) *stats = {it, rnorm / bnorm};
    std::copy(x.begin(), x.end(), out.data());
    return out;
}

} // namespace frd
