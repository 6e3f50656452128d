#ifndef MINCUB_ANGLE_CELLS_HPP
#define MINCUB_ANGLE_CELLS_HPP

#include "mincub/opq1d.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

namespace mincub::detail {

/// n-point rule for the integral over [0, pi/2] of g(phi) sin(phi)^p cos(phi)^q. Gauss-Jacobi
/// absorbs the endpoint behaviour; the remaining sinc-like factors are analytic.
inline QuadratureRule1D quarter_period_rule(double p, double q, std::size_t n) {
    QuadratureRule1D g = gauss_jacobi(q, p, n);
    constexpr double h = std::numbers::pi / 4.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = g.nodes[i];
        const double phi = h * (1.0 + s);
        const double psi = h * (1.0 - s);
        const double fs = std::sin(phi) / (1.0 + s);
        const double fc = std::sin(psi) / (1.0 - s);
        g.weights[i] *= h * std::pow(fs, p) * std::pow(fc, q);
        g.nodes[i] = phi;
    }
    return g;
}

/// Rules on [0, pi/2] for |sin psi|^p |cos psi|^q over the cell [j pi/2, (j+1) pi/2]
/// in the local variable psi - j pi/2: even j keeps the orientation, odd j swaps p and q.
struct QuarterRules {
    QuadratureRule1D even;
    QuadratureRule1D odd;

    QuarterRules(double p, double q, std::size_t n)
        : even(quarter_period_rule(p, q, n)), odd(quarter_period_rule(q, p, n)) {}

    const QuadratureRule1D& cell(long j) const { return (j % 2 == 0) ? even : odd; }
};

} // namespace mincub::detail

#endif
