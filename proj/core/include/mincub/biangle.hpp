#ifndef MINCUB_BIANGLE_HPP
#define MINCUB_BIANGLE_HPP

#include "mincub/cubature.hpp"
#include "mincub/opq1d.hpp"

#include <cstddef>
#include <vector>

namespace mincub {

/// Point of the parabolic biangle Omega, the image of (x1, x2) under u = (x1+x2, x1 x2).
struct BianglePoint {
    double u1;
    double u2;
};

BianglePoint map_x_to_u(double x1, double x2) noexcept;

/// u1^2 >= 4 u2 and 1 + u2 >= |u1|, each allowed to fail by at most tol.
bool in_omega(BianglePoint p, double tol = 0.0) noexcept;

/// Orthonormal Koornwinder polynomial P_k^{n,gamma} at p (0 <= k <= n). Needs n+1
/// recurrence coefficients for gamma = -1/2 and n+2 for gamma = +1/2.
double eval_koornwinder(const RecurrenceCoeffs& rc, std::size_t n, std::size_t k, Gamma gamma,
                        BianglePoint p);

/// Gauss cubature of degree 2n-1 on Omega with n(n+1)/2 nodes for the weight
/// w(x1) w(x2) |x1 - x2|^{2 gamma + 1} pushed forward to u.
CubatureRule2D gauss_cubature_biangle(const WeightSpec& spec, std::size_t n);
CubatureRule2D gauss_cubature_biangle(const RecurrenceCoeffs& rc, std::size_t n, Gamma gamma);

/// Integral of u1^a u2^b over Omega against the biangle weight.
double biangle_moment(const RecurrenceCoeffs& rc, Gamma gamma, int a, int b);
double biangle_moment(const WeightSpec& spec, int a, int b);

/// Moments of u1^a u2^b (and of their absolute values) for all a + b <= max_degree.
/// The Chebyshev basis uses T_a(u1 / 2) T_b(u2).
MomentTable biangle_moment_table(const WeightSpec& spec, int max_degree, Basis basis = Basis::monomial);

} // namespace mincub

#endif
