#ifndef MINCUB_ORACLE_HPP
#define MINCUB_ORACLE_HPP

#include "mincub/cubature.hpp"

#include <functional>
#include <vector>

namespace mincub {

struct MonomialError {
    int i;
    int j;
    double rel_error;
};

struct ExactnessReport {
    Basis basis = Basis::monomial;
    int max_degree_tested = 0;
    int certified_degree = -1; // -1 when even the mass is wrong
    double worst_rel_error = 0.0;
    std::vector<MonomialError> failures; // sorted by (i + j, i)
};

/// Reference moments of a Jacobi-based square or composed weight. The angle square is cut
/// along the lines where the weight is not smooth; each cell is integrated by a tensor
/// Gauss-Jacobi rule whose endpoint exponents match the weight, and the rule size doubles
/// until successive levels agree to 1e-13 of the absolute moment. Throws
/// ConvergenceError otherwise.
MomentTable square_moment_table(const WeightSpec& spec, int max_degree, Basis basis = Basis::monomial);

double square_moment(const WeightSpec& spec, int i, int j);

/// Moments of W^(ell)_{a,b,-1/2}.
double composed_moment(const WeightSpec& spec, int i, int j);
/// Chebyshev base weight.
double composed_moment(int ell, int i, int j);

/// Relative error per monomial |Q - I| / max(|I|, mass * max_nodes |x^i y^j|) for all total
/// degrees up to max_degree; |Q - I| <= 64 eps mass counts as exact.
ExactnessReport certify(const CubatureRule2D& rule, const MomentSource& moments, int max_degree,
                        double rel_tol = 1e-9);

/// Same, in the table's basis, with the absolute moment integral of |b_ij| W as a further
/// lower bound of the denominator so that monomials vanishing at every node stay measurable.
ExactnessReport certify(const CubatureRule2D& rule, const MomentTable& table, int max_degree,
                        double rel_tol = 1e-9);

} // namespace mincub

#endif
