#include "frdvasc/grid.hpp"

#include <algorithm>
#include <cmath>

namespace frd {

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

double ScalarField::min() const { return *std::min_element(v_.begin(), v_.end()); }
double ScalarField::max() const { return *std::max_element(v_.begin(), v_.end()); }

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

bool ScalarField::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { a += b; return a; }
ScalarField operator-(ScalarField a, const ScalarField& b) { a -= b; return a; }
ScalarField operator*(double s, ScalarField a) { a *= s; return a; }

} // namespace frd
