#ifndef MINCUB_OPQ1D_HPP
#define MINCUB_OPQ1D_HPP

#include "mincub/common.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mincub {

/// Three-term recurrence of a monic orthogonal polynomial family,
///
///     pi_{k+1}(t) = (t - a_k) pi_k(t) - b_k pi_{k-1}(t),
///
/// together with the total mass mu0 of the weight. `a` holds a_0..a_{m-1} and `b` holds
/// b_1..b_{m-1} (so `b.size() == a.size() - 1`). All b_k and mu0 are positive.
struct RecurrenceCoeffs {
    std::vector<double> a;
    std::vector<double> b;
    double mu0 = 0.0;

    std::size_t size() const noexcept { return a.size(); }
    /// b_k for 1 <= k < size().
    double b_at(std::size_t k) const { return b.at(k - 1); }
    /// Throws std::invalid_argument if the invariants above do not hold.
    void validate() const;
};

/// Gauss rule: strictly increasing nodes, positive weights summing to mu0.
struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Jacobi weight (1-t)^alpha (1+t)^beta on (-1,1).
double jacobi_density(double alpha, double beta, double t);

/// Monic Jacobi recurrence with m diagonal coefficients; mu0 = 2^(a+b+1) B(a+1, b+1).
RecurrenceCoeffs jacobi_recurrence(double alpha, double beta, std::size_t m);

/// Orthonormal polynomial p_n(w; t) with the integral of p_n^2 w equal to one.
/// Requires n < rc.size().
double eval_orthonormal(const RecurrenceCoeffs& rc, std::size_t n, double t);

struct ValueDerivative {
    double value;
    double derivative;
};

/// p_n(w; t) and its derivative in one pass.
ValueDerivative eval_orthonormal_d(const RecurrenceCoeffs& rc, std::size_t n, double t);

/// Writes p_0(t) .. p_{out.size()-1}(t). Requires out.size() <= rc.size().
void eval_orthonormal_all(const RecurrenceCoeffs& rc, double t, std::span<double> out);

/// Classically normalized Jacobi polynomial, P_n^{(a,b)}(1) = binom(n+a, n).
double eval_jacobi_standard(double alpha, double beta, std::size_t n, double t);

/// d/dt P_n^{(a,b)}(t) = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}(t).
double eval_jacobi_standard_derivative(double alpha, double beta, std::size_t n, double t);

/// m-point Gauss rule by Golub-Welsch. Exact for polynomials of degree 2m-1 against the
/// measure described by rc. Throws ConvergenceError if the eigensolver fails.
QuadratureRule1D gauss_rule(const RecurrenceCoeffs& rc, std::size_t m);

/// Shorthand for gauss_rule(jacobi_recurrence(alpha, beta, m), m).
QuadratureRule1D gauss_jacobi(double alpha, double beta, std::size_t m);

/// Quasi-orthogonal polynomial used for the diagonal nodes of odd-degree rules:
///
///     S_m(t) = P_m^{(a,b+1)}(1) P_m^{(a+1,b)}(z) -/+ P_m^{(a,b+1)}(z) P_m^{(a+1,b)}(1),
///     z = 2t^2 - 1,
///
/// with the minus sign for Gamma::plus_half and the plus sign for Gamma::minus_half.
/// Even in t, degree 2m. The plus_half variant vanishes at t = +-1.
double quasi_s(double alpha, double beta, std::size_t m, Gamma sign, double t);

/// d/dt of quasi_s.
double quasi_s_derivative(double alpha, double beta, std::size_t m, Gamma sign, double t);

/// The 2m+1 diagonal abscissae of the odd-degree minimal rule, ascending:
///   minus_half: zeros of t S_m(t) in [-1, 1];
///   plus_half:  zeros of t S_{m+1}(t) in (-1, 1), the endpoint zeros excluded.
/// Throws ConstructionError if the count is not 2m+1.
std::vector<double> diagonal_zero_set(double alpha, double beta, std::size_t m, Gamma sign);

} // namespace mincub

#endif
