#ifndef MINCUB_TRIDIAGONAL_HPP
#define MINCUB_TRIDIAGONAL_HPP

#include <span>
#include <vector>

namespace mincub {

struct TridiagonalEigen {
    std::vector<double> values;           // ascending
    std::vector<double> first_components; // first entry of each unit eigenvector
};

/// Eigenvalues and first eigenvector components of the symmetric tridiagonal matrix with
/// the given diagonal and sub-diagonal (size n-1), by the implicit-shift QL method.
/// Only the first row of the eigenvector matrix is accumulated. Throws ConvergenceError
/// after 50*n sweeps in total.
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> offdiagonal);

} // namespace mincub

#endif
