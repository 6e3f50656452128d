#ifndef MINCUB_TESTS_SUPPORT_HPP
#define MINCUB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace testing {

inline constexpr double pi = std::numbers::pi;

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// Fixed-seed generators; every property test draws from its own stream.
inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline double uniform(std::mt19937& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

// (2k-1)!! / (2k)!! * pi: integral of t^{2k} / sqrt(1 - t^2) over [-1, 1].
inline double chebyshev_moment(int i) {
    if (i % 2 != 0) return 0.0;
    double v = pi;
    for (int k = 1; k <= i; k += 2) v *= static_cast<double>(k) / (k + 1);
    return v;
}

} // namespace testing

#endif
