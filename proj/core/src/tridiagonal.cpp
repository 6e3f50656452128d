#include "mincub/tridiagonal.hpp"

#include "mincub/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mincub {

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> offdiagonal) {
    const std::size_t n = diagonal.size();
    if (n == 0) {
        throw std::invalid_argument("symmetric_tridiagonal_eigen: empty matrix");
    }
    if (offdiagonal.size() + 1 < n) {
        throw std::invalid_argument("symmetric_tridiagonal_eigen: off-diagonal too short");
    }

    std::vector<double> d(diagonal.begin(), diagonal.end());
    std::vector<double> e(n, 0.0);
    std::copy_n(offdiagonal.begin(), n - 1, e.begin());
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t max_sweeps = 50 * n;
    std::size_t sweeps = 0;

    for (std::size_t l = 0; l < n; ++l) {
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++sweeps > max_sweeps) {
                throw ConvergenceError("symmetric_tridiagonal_eigen: QL iteration did not converge");
            }

            // Wilkinson-type shift from the leading 2x2 block.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                const double zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    TridiagonalEigen out;
    out.values.reserve(n);
    out.first_components.reserve(n);
    for (std::size_t k : order) {
        out.values.push_back(d[k]);
        out.first_components.push_back(z[k]);
    }
    return out;
}

} // namespace mincub
