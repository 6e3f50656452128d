#ifndef MINCUB_COMMON_HPP
#define MINCUB_COMMON_HPP

#include <stdexcept>
#include <string>

namespace mincub {

/// The two weight exponents with explicit constructions, gamma = -1/2 and gamma = +1/2.
enum class Gamma { minus_half, plus_half };

constexpr double value(Gamma g) noexcept { return g == Gamma::minus_half ? -0.5 : 0.5; }

/// Parses -0.5 / 0.5 (exact); anything else is rejected.
Gamma gamma_from_value(double g);

/// Raised when an iterative kernel (eigensolver, quadrature ladder) fails to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a rule cannot be assembled: node-count mismatch, moment residual too
/// large, nonpositive weight. Never accompanied by a partial result.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mincub

#endif
