#ifndef MINCUB_COMPOSED_HPP
#define MINCUB_COMPOSED_HPP

#include "mincub/cubature.hpp"
#include "mincub/opq1d.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace mincub {

/// w^(ell)(t) = w(T_ell(t)) sqrt(1 - T_ell(t)^2) / sqrt(1 - t^2), |t| < 1.
double w_ell_value(const WeightSpec& base, int ell, double t);

/// max over k < ell m of |integral of p_m(w; T_ell(t)) T_k(t) w^(ell)(t) dt| for a Jacobi
/// base weight, by Gauss-Jacobi on the ell cells between the zeros of sin(ell theta).
/// `points` is the rule size per cell.
double composed_op_identity_check(double alpha, double beta, int ell, std::size_t m,
                                  std::size_t points = 64);

/// |integral of T_ell(t)^i dt/sqrt(1-t^2) - integral of t^i dt/sqrt(1-t^2)|, the left side by a
/// 200-point Gauss-Chebyshev rule, the right side in closed form.
double folding_identity_check(int ell, int i);

struct OrbitSet {
    std::vector<Node2> points;
    /// Number of points of the G_ell x G_ell orbit on the angle torus folded onto each
    /// point: 1 or 2 per coordinate, 1 exactly when the angle is 0 or pi.
    std::vector<int> multiplicity;
    double theta = 0.0;
    double phi = 0.0;
    int ell = 1;

    std::size_t size() const noexcept { return points.size(); }
};

/// Preimages under (T_ell, T_ell) of (s, t) = (cos theta, cos phi) (X_plus) and of (-s, -t)
/// (X_minus), with all angular arguments in [0, pi]. theta, phi in [0, pi].
std::pair<OrbitSet, OrbitSet> orbit_sets(int ell, double theta, double phi);

/// Minimal rule of degree 4 ell m - 1 with 2 ell^2 m^2 + 2 ell m nodes for the composed
/// weight W^(ell)_{-1/2}; spec.family must be square-W-ell.
CubatureRule2D composed_rule(const WeightSpec& spec, std::size_t m);
CubatureRule2D composed_rule(const RecurrenceCoeffs& rc, int ell, std::size_t m);

} // namespace mincub

#endif
