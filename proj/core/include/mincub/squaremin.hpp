#ifndef MINCUB_SQUAREMIN_HPP
#define MINCUB_SQUAREMIN_HPP

#include "mincub/cubature.hpp"
#include "mincub/opq1d.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace mincub {

/// Lower bound n(n+1)/2 + floor(n/2) on the node count of a centrally symmetric rule of
/// degree 2n-1.
long long moller_bound(long long n);

/// W(x1, x2) for square and composed specs. Returns +inf on a singular line carrying a
/// negative exponent.
double weight_W(const WeightSpec& spec, double x1, double x2);

/// 1-based pair of Gauss node indices, 1 <= j <= k <= m.
struct NodeOrbitIndex {
    std::size_t j;
    std::size_t k;
    std::size_t m;
};

/// (s, t) = (cos((theta_j - theta_k)/2), cos((theta_j + theta_k)/2)) where
/// t_i = cos(theta_i) are the nodes of g.
std::pair<double, double> half_angle_pair(const QuadratureRule1D& g, NodeOrbitIndex idx);

/// Minimal rule of degree 4m-1 with 2m(m+1) nodes for W_{+-1/2}.
CubatureRule2D minimal_rule_even(const WeightSpec& spec, std::size_t m);

/// Minimal rule of degree 4m+1 with 2(m+1)^2 - 1 nodes for the Jacobi weight W_{a,b,+-1/2}.
/// Weights come from a symmetry-reduced least-squares moment fit; throws
/// ConstructionError if the fit is inexact or a weight is not positive.
CubatureRule2D minimal_rule_odd(double alpha, double beta, Gamma gamma, std::size_t m);

/// Orthogonal basis polynomial 1Q (branch 1) or 2Q (branch 2) of degree n for
/// W_{a,b,gamma}. Valid k: n = 2N gives k <= N (branch 1) or k <= N-1 (branch 2);
/// n = 2N+1 gives k <= N for both branches.
double eval_Q_basis(double alpha, double beta, Gamma gamma, std::size_t n, int branch, std::size_t k,
                    double x1, double x2);

/// Integrates a function invariant under x -> -x and (x1,x2) -> (x2,x1) against W by
/// pulling it back to a tensor Gauss rule of w with q points per axis. Exact for
/// invariant polynomials of degree <= 4q - 6.
double invariant_integral(const WeightSpec& spec, std::size_t q,
                          const std::function<double(double, double)>& f);

/// Visits the nodes (x1, x2) and weights of that pulled-back rule.
void for_each_invariant_node(const WeightSpec& spec, std::size_t q,
                             const std::function<void(double, double, double)>& visit);

/// Integrals of x1^i x2^j W for i + j <= max_degree via the invariant route (using the
/// symmetrized monomial), row-major in i with stride max_degree + 1.
std::vector<double> invariant_moment_table(const WeightSpec& spec, int max_degree);

} // namespace mincub

#endif
