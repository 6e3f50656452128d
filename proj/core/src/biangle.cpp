#include "mincub/biangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mincub {

namespace {

constexpr double confluent_threshold = 1e-10;

// Roots x_lo <= x_hi of x^2 - u1 x + u2 without cancellation.
std::pair<double, double> recover_roots(BianglePoint p) {
    const double disc = std::max(0.0, p.u1 * p.u1 - 4.0 * p.u2);
    const double sq = std::sqrt(disc);
    const double big = p.u1 >= 0.0 ? 0.5 * (p.u1 + sq) : 0.5 * (p.u1 - sq);
    const double other = big != 0.0 ? p.u2 / big : 0.0;
    return {std::min(big, other), std::max(big, other)};
}

double gamma_factor(Gamma g, double x1, double x2) {
    if (g == Gamma::minus_half) {
        return 1.0;
    }
    const double d = x1 - x2;
    return d * d;
}

} // namespace

BianglePoint map_x_to_u(double x1, double x2) noexcept { return {x1 + x2, x1 * x2}; }

bool in_omega(BianglePoint p, double tol) noexcept {
    return p.u1 * p.u1 - 4.0 * p.u2 >= -tol && 1.0 + p.u2 - std::abs(p.u1) >= -tol;
}

double eval_koornwinder(const RecurrenceCoeffs& rc, std::size_t n, std::size_t k, Gamma gamma,
                        BianglePoint p) {
    if (k > n) {
        throw std::invalid_argument("eval_koornwinder: k must not exceed n");
    }
    if (!in_omega(p, 1e-12)) {
        throw std::domain_error("eval_koornwinder: point (" + std::to_string(p.u1) + ", " +
                                std::to_string(p.u2) + ") lies outside the biangle");
    }
    const auto [x1, x2] = recover_roots(p);

    if (gamma == Gamma::minus_half) {
        const double pn1 = eval_orthonormal(rc, n, x1);
        const double pn2 = eval_orthonormal(rc, n, x2);
        if (k == n) {
            return std::sqrt(2.0) * pn1 * pn2;
        }
        return pn1 * eval_orthonormal(rc, k, x2) + pn2 * eval_orthonormal(rc, k, x1);
    }

    if (p.u1 * p.u1 - 4.0 * p.u2 < confluent_threshold) {
        const double x = 0.5 * p.u1;
        const auto hi = eval_orthonormal_d(rc, n + 1, x);
        const auto lo = eval_orthonormal_d(rc, k, x);
        return hi.derivative * lo.value - lo.derivative * hi.value;
    }
    const double num = eval_orthonormal(rc, n + 1, x1) * eval_orthonormal(rc, k, x2) -
                       eval_orthonormal(rc, n + 1, x2) * eval_orthonormal(rc, k, x1);
    return num / (x1 - x2);
}

CubatureRule2D gauss_cubature_biangle(const WeightSpec& spec, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("gauss_cubature_biangle: n must be positive");
    }
    spec.validate();
    const bool minus = spec.gamma == Gamma::minus_half;
    const std::size_t q = minus ? n : n + 1;
    const QuadratureRule1D g = gauss_rule(spec.base_recurrence(q), q);

    CubatureRule2D rule;
    rule.degree = static_cast<int>(2 * n - 1);
    rule.domain = Domain::biangle;
    rule.family = RuleFamily::biangle;
    rule.weight = spec;
    rule.weight.family = WeightFamily::biangle_gamma;
    rule.param = static_cast<int>(n);
    for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = minus ? j : j + 1; k < q; ++k) {
            const double tj = g.nodes[j];
            const double tk = g.nodes[k];
            const BianglePoint u = map_x_to_u(tj, tk);
            double w = g.weights[j] * g.weights[k];
            if (minus) {
                if (j == k) w *= 0.5;
            } else {
                w *= (tj - tk) * (tj - tk);
            }
            rule.nodes.push_back({u.u1, u.u2});
            rule.weights.push_back(w);
        }
    }
    sort_and_merge(rule.nodes, rule.weights);
    if (rule.size() != n * (n + 1) / 2) {
        throw ConstructionError("gauss_cubature_biangle: expected " + std::to_string(n * (n + 1) / 2) +
                                " nodes, got " + std::to_string(rule.size()));
    }
    return rule;
}

CubatureRule2D gauss_cubature_biangle(const RecurrenceCoeffs& rc, std::size_t n, Gamma gamma) {
    WeightSpec spec;
    spec.family = WeightFamily::biangle_gamma;
    spec.gamma = gamma;
    spec.recurrence = rc;
    return gauss_cubature_biangle(spec, n);
}

namespace {

// Half the tensor rule on [-1,1]^2 applied to the pulled-back integrand; q points per
// axis integrate polynomials of degree 2q-1 in each variable.
MomentTable moment_table_from_rule(const QuadratureRule1D& g, Gamma gamma, int max_degree, Basis basis) {
    const int stride = max_degree + 1;
    MomentTable table;
    table.max_degree = max_degree;
    table.basis = basis;
    table.x1_scale = basis == Basis::monomial ? 1.0 : 0.5;
    table.values.assign(static_cast<std::size_t>(stride * stride), 0.0);
    table.abs_values = table.values;
    table.points_per_axis = g.size();
    std::vector<double> pu1(stride), pu2(stride);
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double x1 = g.nodes[j];
            const double x2 = g.nodes[k];
            const double w = 0.5 * g.weights[j] * g.weights[k] * gamma_factor(gamma, x1, x2);
            basis_values(basis, table.x1_scale * (x1 + x2), max_degree, pu1);
            basis_values(basis, x1 * x2, max_degree, pu2);
            for (int a = 0; a <= max_degree; ++a) {
                for (int b = 0; a + b <= max_degree; ++b) {
                    const double v = w * pu1[a] * pu2[b];
                    table.values[a * stride + b] += v;
                    table.abs_values[a * stride + b] += std::abs(v);
                }
            }
        }
    }
    return table;
}

} // namespace

double biangle_moment(const RecurrenceCoeffs& rc, Gamma gamma, int a, int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("biangle_moment: exponents must be nonnegative");
    }
    const std::size_t q = static_cast<std::size_t>(a + 2 * b + 2);
    if (rc.size() < q) {
        throw std::out_of_range("biangle_moment: recurrence covers " + std::to_string(rc.size()) +
                                " coefficients, " + std::to_string(q) + " required");
    }
    const QuadratureRule1D g = gauss_rule(rc, q);
    double s = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = 0; k < q; ++k) {
            const double x1 = g.nodes[j];
            const double x2 = g.nodes[k];
            s += g.weights[j] * g.weights[k] * gamma_factor(gamma, x1, x2) *
                 std::pow(x1 + x2, a) * std::pow(x1 * x2, b);
        }
    }
    return 0.5 * s;
}

double biangle_moment(const WeightSpec& spec, int a, int b) {
    spec.validate();
    const std::size_t q = static_cast<std::size_t>(std::max(a, 0) + 2 * std::max(b, 0) + 2);
    return biangle_moment(spec.base_recurrence(q), spec.gamma, a, b);
}

MomentTable biangle_moment_table(const WeightSpec& spec, int max_degree, Basis basis) {
    if (max_degree < 0) {
        throw std::invalid_argument("biangle_moment_table: negative degree");
    }
    spec.validate();
    const std::size_t q = static_cast<std::size_t>(2 * max_degree + 2);
    return moment_table_from_rule(gauss_rule(spec.base_recurrence(q), q), spec.gamma, max_degree, basis);
}

} // namespace mincub
