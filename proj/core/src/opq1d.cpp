#include "mincub/opq1d.hpp"

#include "mincub/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mincub {

namespace {

void check_jacobi_params(double alpha, double beta, const char* who) {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw std::invalid_argument(std::string(who) + ": Jacobi parameters must exceed -1");
    }
}

double jacobi_mass(double alpha, double beta) {
    const double s = alpha + beta;
    if (alpha + 1.0 < 150.0 && beta + 1.0 < 150.0) {
        return std::exp2(s + 1.0) * std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0) /
               std::tgamma(s + 2.0);
    }
    return std::exp((s + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                    std::lgamma(s + 2.0));
}

} // namespace

void RecurrenceCoeffs::validate() const {
    if (a.empty()) {
        throw std::invalid_argument("RecurrenceCoeffs: no coefficients");
    }
    if (b.size() + 1 != a.size()) {
        throw std::invalid_argument("RecurrenceCoeffs: expected a.size() - 1 off-diagonal coefficients");
    }
    if (!(mu0 > 0.0)) {
        throw std::invalid_argument("RecurrenceCoeffs: mu0 must be positive");
    }
    for (double bk : b) {
        if (!(bk > 0.0)) {
            throw std::invalid_argument("RecurrenceCoeffs: off-diagonal coefficients must be positive");
        }
    }
}

double jacobi_density(double alpha, double beta, double t) {
    return std::pow(1.0 - t, alpha) * std::pow(1.0 + t, beta);
}

RecurrenceCoeffs jacobi_recurrence(double alpha, double beta, std::size_t m) {
    check_jacobi_params(alpha, beta, "jacobi_recurrence");
    if (m == 0) {
        throw std::invalid_argument("jacobi_recurrence: need at least one coefficient");
    }
    RecurrenceCoeffs rc;
    rc.a.resize(m);
    rc.b.resize(m - 1);
    rc.mu0 = jacobi_mass(alpha, beta);

    const double s = alpha + beta;
    const double diff = beta * beta - alpha * alpha;
    rc.a[0] = (beta - alpha) / (s + 2.0);
    for (std::size_t k = 1; k < m; ++k) {
        const double kk = static_cast<double>(k);
        const double two_k_s = 2.0 * kk + s;
        rc.a[k] = diff / (two_k_s * (two_k_s + 2.0));
        if (k == 1) {
            // The general expression has a removable 0/0 at alpha + beta = -1.
            rc.b[0] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
            rc.b[k - 1] = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + s) /
                          (two_k_s * two_k_s * (two_k_s + 1.0) * (two_k_s - 1.0));
        }
    }
    return rc;
}

void eval_orthonormal_all(const RecurrenceCoeffs& rc, double t, std::span<double> out) {
    if (out.empty()) {
        return;
    }
    if (out.size() > rc.size()) {
        throw std::out_of_range("eval_orthonormal_all: insufficient recurrence coefficients");
    }
    out[0] = 1.0 / std::sqrt(rc.mu0);
    double sqrt_b_prev = 0.0;
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        const double sqrt_b_next = std::sqrt(rc.b[k]);
        const double prev = k == 0 ? 0.0 : out[k - 1];
        out[k + 1] = ((t - rc.a[k]) * out[k] - sqrt_b_prev * prev) / sqrt_b_next;
        sqrt_b_prev = sqrt_b_next;
    }
}

ValueDerivative eval_orthonormal_d(const RecurrenceCoeffs& rc, std::size_t n, double t) {
    if (n >= rc.size()) {
        throw std::out_of_range("eval_orthonormal: degree " + std::to_string(n) +
                                " needs more recurrence coefficients");
    }
    double p_prev = 0.0;
    double dp_prev = 0.0;
    double p = 1.0 / std::sqrt(rc.mu0);
    double dp = 0.0;
    double sqrt_b_prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double sqrt_b_next = std::sqrt(rc.b[k]);
        const double p_next = ((t - rc.a[k]) * p - sqrt_b_prev * p_prev) / sqrt_b_next;
        const double dp_next = ((t - rc.a[k]) * dp + p - sqrt_b_prev * dp_prev) / sqrt_b_next;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
        sqrt_b_prev = sqrt_b_next;
    }
    return {p, dp};
}

double eval_orthonormal(const RecurrenceCoeffs& rc, std::size_t n, double t) {
    return eval_orthonormal_d(rc, n, t).value;
}

double eval_jacobi_standard(double alpha, double beta, std::size_t n, double t) {
    check_jacobi_params(alpha, beta, "eval_jacobi_standard");
    if (n == 0) {
        return 1.0;
    }
    const double s = alpha + beta;
    double p_prev = 1.0;
    double p = 0.5 * (s + 2.0) * t + 0.5 * (alpha - beta);
    for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double c = 2.0 * kk + s;
        const double a1 = 2.0 * kk * (kk + s) * (c - 2.0);
        const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (c - 2.0) * (c - 1.0) * c;
        const double a4 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * c;
        const double p_next = ((a2 + a3 * t) * p - a4 * p_prev) / a1;
        p_prev = p;
        p = p_next;
    }
    return p;
}

double eval_jacobi_standard_derivative(double alpha, double beta, std::size_t n, double t) {
    if (n == 0) {
        check_jacobi_params(alpha, beta, "eval_jacobi_standard_derivative");
        return 0.0;
    }
    return 0.5 * (static_cast<double>(n) + alpha + beta + 1.0) *
           eval_jacobi_standard(alpha + 1.0, beta + 1.0, n - 1, t);
}

QuadratureRule1D gauss_rule(const RecurrenceCoeffs& rc, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("gauss_rule: need at least one node");
    }
    if (rc.size() < m) {
        throw std::out_of_range("gauss_rule: recurrence covers only " + std::to_string(rc.size()) +
                                " coefficients, " + std::to_string(m) + " required");
    }
    std::vector<double> off(m - 1);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        off[k] = std::sqrt(rc.b[k]);
    }
    const auto eig = symmetric_tridiagonal_eigen(std::span(rc.a).first(m), off);

    QuadratureRule1D rule;
    rule.nodes = eig.values;
    rule.weights.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double v = eig.first_components[k];
        rule.weights[k] = rc.mu0 * v * v;
    }
    return rule;
}

QuadratureRule1D gauss_jacobi(double alpha, double beta, std::size_t m) {
    return gauss_rule(jacobi_recurrence(alpha, beta, m), m);
}

double quasi_s(double alpha, double beta, std::size_t m, Gamma sign, double t) {
    const double z = 2.0 * t * t - 1.0;
    const double a = eval_jacobi_standard(alpha, beta + 1.0, m, 1.0);
    const double b = eval_jacobi_standard(alpha + 1.0, beta, m, 1.0);
    const double first = a * eval_jacobi_standard(alpha + 1.0, beta, m, z);
    const double second = eval_jacobi_standard(alpha, beta + 1.0, m, z) * b;
    return sign == Gamma::plus_half ? first - second : first + second;
}

double quasi_s_derivative(double alpha, double beta, std::size_t m, Gamma sign, double t) {
    const double z = 2.0 * t * t - 1.0;
    const double a = eval_jacobi_standard(alpha, beta + 1.0, m, 1.0);
    const double b = eval_jacobi_standard(alpha + 1.0, beta, m, 1.0);
    const double first = a * eval_jacobi_standard_derivative(alpha + 1.0, beta, m, z);
    const double second = eval_jacobi_standard_derivative(alpha, beta + 1.0, m, z) * b;
    const double dz = 4.0 * t;
    return dz * (sign == Gamma::plus_half ? first - second : first + second);
}

std::vector<double> diagonal_zero_set(double alpha, double beta, std::size_t m, Gamma sign) {
    check_jacobi_params(alpha, beta, "diagonal_zero_set");
    if (m == 0) {
        throw std::invalid_argument("diagonal_zero_set: m must be positive");
    }
    const std::size_t order = sign == Gamma::minus_half ? m : m + 1;
    auto s = [&](double t) { return quasi_s(alpha, beta, order, sign, t); };

    // S is even: search (0, 1] on a uniform grid and mirror.
    const std::size_t grid = 64 * order;
    std::vector<double> values(grid + 1);
    double scale = 0.0;
    for (std::size_t i = 0; i <= grid; ++i) {
        values[i] = s(static_cast<double>(i) / static_cast<double>(grid));
        scale = std::max(scale, std::abs(values[i]));
    }
    const bool endpoint_zero = std::abs(values[grid]) < 1e-12 * scale;
    if (endpoint_zero) {
        values[grid] = 0.0;
    }

    std::vector<double> positive;
    for (std::size_t i = 0; i < grid; ++i) {
        double lo = static_cast<double>(i) / static_cast<double>(grid);
        double hi = static_cast<double>(i + 1) / static_cast<double>(grid);
        double flo = values[i];
        const double fhi = values[i + 1];
        if (i + 1 == grid && endpoint_zero) {
            break;
        }
        if (flo == 0.0) {
            if (i > 0) {
                positive.push_back(lo);
            }
            continue;
        }
        if ((flo < 0.0) == (fhi < 0.0) || fhi == 0.0) {
            continue;
        }
        while (hi - lo > 1e-14) {
            const double mid = 0.5 * (lo + hi);
            const double fm = s(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double root = 0.5 * (lo + hi);
        const double bracket_lo = static_cast<double>(i) / static_cast<double>(grid);
        const double bracket_hi = static_cast<double>(i + 1) / static_cast<double>(grid);
        for (int it = 0; it < 3; ++it) {
            const double d = quasi_s_derivative(alpha, beta, order, sign, root);
            if (d == 0.0) {
                break;
            }
            const double next = root - s(root) / d;
            if (!(next > bracket_lo && next < bracket_hi)) {
                break;
            }
            root = next;
        }
        positive.push_back(root);
    }
    if (endpoint_zero && sign == Gamma::minus_half) {
        positive.push_back(1.0);
    }

    std::vector<double> zeros;
    zeros.reserve(2 * positive.size() + 1);
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        zeros.push_back(-*it);
    }
    zeros.push_back(0.0);
    zeros.insert(zeros.end(), positive.begin(), positive.end());

    if (zeros.size() != 2 * m + 1) {
        throw ConstructionError("diagonal_zero_set: found " + std::to_string(zeros.size()) +
                                " diagonal zeros, expected " + std::to_string(2 * m + 1) +
                                " (alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                                ", m=" + std::to_string(m) + ")");
    }
    return zeros;
}

} // namespace mincub
