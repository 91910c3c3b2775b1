#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frd {

// Uniform cell-centered grid on the unit square. Cell (i,j) is centered at
// ((i+1/2)h, (j+1/2)h) with h = 1/n, 0 <= i,j < n.
struct Grid {
    int n = 0;
    double h = 0.0;

    Grid() = default;
    explicit Grid(int cells) : n(cells), h(1.0 / cells) {
        if (cells < 4) throw std::invalid_argument("Grid: need at least 4 cells per side");
    }

    double x(int i) const { return (i + 0.5) * h; }
    double y(int j) const { return (j + 0.5) * h; }
    std::size_t cells() const { return static_cast<std::size_t>(n) * n; }

    bool operator==(const Grid& o) const { return n == o.n; }
};

// Scalar samples on a grid, stored row-major with x fastest:
// value(i,j) = data[j*n + i].
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid_(g), v_(g.cells(), fill) {}

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n; }
    double h() const { return grid_.h; }

    double& operator()(int i, int j) { return v_[static_cast<std::size_t>(j) * grid_.n + i]; }
    double operator()(int i, int j) const { return v_[static_cast<std::size_t>(j) * grid_.n + i]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s);

    double min() const;
    double max() const;
    double max_abs() const;
    bool all_finite() const;

private:
    Grid grid_;
    std::vector<double> v_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);

// Two-component vector samples (u = x-component, v = y-component).
struct VectorField {
    ScalarField u;
    ScalarField v;

    VectorField() = default;
    explicit VectorField(const Grid& g, double fill = 0.0) : u(g, fill), v(g, fill) {}

    const Grid& grid() const { return u.grid(); }
    bool all_finite() const { return u.all_finite() && v.all_finite(); }
};

} // namespace frd
