#include "mincub/squaremin.hpp"

#include "mincub/biangle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mincub {

namespace {

double chebyshev_t(int ell, double x) {
    // cos(ell acos x), but by recurrence to keep polynomial accuracy near +-1.
    double t0 = 1.0;
    double t1 = x;
    if (ell == 0) return t0;
    for (int k = 1; k < ell; ++k) {
        const double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double abs_pow(double base, double expo) {
    // |base|^expo with 0^0 = 1, 0^negative = inf.
    return std::pow(std::abs(base), expo);
}

void check_square_spec(const WeightSpec& spec, const char* who) {
    spec.validate();
    if (spec.family != WeightFamily::square_w) {
        throw std::invalid_argument(std::string(who) + ": expected a square weight (family square-W)");
    }
}

// The four images (s,t), (t,s), (-s,-t), (-t,-s).
void push_orbit(std::vector<Node2>& nodes, std::vector<double>& weights, double s, double t, double w) {
    const Node2 pts[4] = {{s, t}, {t, s}, {-s, -t}, {-t, -s}};
    for (const auto& p : pts) {
        nodes.push_back(p);
        weights.push_back(w);
    }
}

std::size_t checked_count(std::size_t got, std::size_t want, const char* who) {
    if (got != want) {
        throw ConstructionError(std::string(who) + ": expected " + std::to_string(want) + " nodes, got " +
                                std::to_string(got));
    }
    return got;
}

} // namespace

long long moller_bound(long long n) {
    if (n < 1) {
        throw std::invalid_argument("moller_bound: n must be positive");
    }
    return n * (n + 1) / 2 + n / 2;
}

double weight_W(const WeightSpec& spec, double x1, double x2) {
    spec.validate();
    if (spec.family == WeightFamily::biangle_gamma) {
        throw std::invalid_argument("weight_W: biangle weights live on Omega, not on the square");
    }
    if (std::abs(x1) > 1.0 || std::abs(x2) > 1.0) {
        throw std::domain_error("weight_W: point outside [-1,1]^2");
    }
    const int ell = spec.family == WeightFamily::square_w_ell ? spec.ell : 1;
    const double g = value(spec.gamma);
    const double r1 = 1.0 - x1 * x1;
    const double r2 = 1.0 - x2 * x2;
    const double y1 = chebyshev_t(ell, x1);
    const double y2 = chebyshev_t(ell, x2);

    if (spec.is_jacobi()) {
        return abs_pow(y1 - y2, 2.0 * spec.alpha + 1.0) * abs_pow(y1 + y2, 2.0 * spec.beta + 1.0) *
               std::pow(r1, g) * std::pow(r2, g);
    }
    const double th1 = std::acos(x1);
    const double th2 = std::acos(x2);
    const double lhs = spec.base_density(std::cos(ell * (th1 - th2)));
    const double rhs = spec.base_density(std::cos(ell * (th1 + th2)));
    return lhs * rhs * std::abs(y1 * y1 - y2 * y2) * std::pow(r1, g) * std::pow(r2, g);
}

std::pair<double, double> half_angle_pair(const QuadratureRule1D& g, NodeOrbitIndex idx) {
    if (idx.j < 1 || idx.j > idx.k || idx.k > idx.m || idx.m != g.size()) {
        throw std::out_of_range("half_angle_pair: index pair outside 1 <= j <= k <= m");
    }
    const double tj = std::acos(std::clamp(g.nodes[idx.j - 1], -1.0, 1.0));
    const double tk = std::acos(std::clamp(g.nodes[idx.k - 1], -1.0, 1.0));
    return {std::cos(0.5 * (tj - tk)), std::cos(0.5 * (tj + tk))};
}

CubatureRule2D minimal_rule_even(const WeightSpec& spec, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("minimal_rule_even: m must be positive");
    }
    check_square_spec(spec, "minimal_rule_even");
    const bool minus = spec.gamma == Gamma::minus_half;
    const std::size_t q = minus ? m : m + 1;
    const QuadratureRule1D g = gauss_rule(spec.base_recurrence(q), q);

    CubatureRule2D rule;
    rule.degree = static_cast<int>(4 * m - 1);
    rule.domain = Domain::square;
    rule.family = RuleFamily::square_even;
    rule.weight = spec;
    rule.param = static_cast<int>(m);
    for (std::size_t k = 1; k <= q; ++k) {
        for (std::size_t j = minus ? 1 : k + 1; j <= (minus ? k : q); ++j) {
            const auto [s, t] = half_angle_pair(g, {std::min(j, k), std::max(j, k), q});
            const double lj = g.weights[j - 1];
            const double lk = g.weights[k - 1];
            double w;
            if (minus) {
                w = 0.5 * lj * lk * (j == k ? 0.5 : 1.0);
            } else {
                const double d = g.nodes[j - 1] - g.nodes[k - 1];
                w = 0.125 * lj * lk * d * d;
            }
            push_orbit(rule.nodes, rule.weights, s, t, w);
        }
    }
    sort_and_merge(rule.nodes, rule.weights);
    checked_count(rule.size(), 2 * m * (m + 1), "minimal_rule_even");
    return rule;
}

void for_each_invariant_node(const WeightSpec& spec, std::size_t q,
                             const std::function<void(double, double, double)>& visit) {
    check_square_spec(spec, "invariant route");
    const QuadratureRule1D g = gauss_rule(spec.base_recurrence(q), q);
    const bool minus = spec.gamma == Gamma::minus_half;
    std::vector<double> theta(q);
    for (std::size_t i = 0; i < q; ++i) {
        theta[i] = std::acos(std::clamp(g.nodes[i], -1.0, 1.0));
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            double w = g.weights[i] * g.weights[j];
            if (!minus) {
                const double d = g.nodes[i] - g.nodes[j];
                w *= 0.25 * d * d;
            }
            const double x1 = std::cos(0.5 * (theta[i] + theta[j]));
            const double x2 = std::cos(0.5 * (theta[j] - theta[i]));
            visit(x1, x2, w);
        }
    }
}

double invariant_integral(const WeightSpec& spec, std::size_t q,
                          const std::function<double(double, double)>& f) {
    double s = 0.0;
    for_each_invariant_node(spec, q, [&](double x1, double x2, double w) { s += w * f(x1, x2); });
    return s;
}

std::vector<double> invariant_moment_table(const WeightSpec& spec, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("invariant_moment_table: negative degree");
    }
    const int stride = max_degree + 1;
    std::vector<double> table(static_cast<std::size_t>(stride * stride), 0.0);
    std::vector<double> p1(stride), p2(stride);
    const std::size_t q = static_cast<std::size_t>(max_degree / 4 + 4);
    for_each_invariant_node(spec, q, [&](double x1, double x2, double w) {
        p1[0] = p2[0] = 1.0;
        for (int d = 1; d < stride; ++d) {
            p1[d] = p1[d - 1] * x1;
            p2[d] = p2[d - 1] * x2;
        }
        for (int i = 0; i <= max_degree; ++i) {
            for (int j = (i & 1); i + j <= max_degree; j += 2) {
                table[i * stride + j] += 0.5 * w * (p1[i] * p2[j] + p1[j] * p2[i]);
            }
        }
    });
    return table;
}

namespace {

struct Orbit {
    std::vector<Node2> points;
};

// Symmetrized Chebyshev products (T_i(x1) T_j(x2) + T_j(x1) T_i(x2)) / 2 with i <= j,
// i + j even and i + j <= degree: a well-conditioned basis of the invariant polynomials.
std::vector<std::pair<int, int>> invariant_basis(int degree) {
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i <= degree; ++i) {
        for (int j = i; i + j <= degree; j += 2) {
            basis.emplace_back(i, j);
        }
    }
    return basis;
}

void chebyshev_values(double x, int degree, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(degree + 1));
    out[0] = 1.0;
    if (degree >= 1) out[1] = x;
    for (int k = 2; k <= degree; ++k) {
        out[k] = 2.0 * x * out[k - 1] - out[k - 2];
    }
}

} // namespace

CubatureRule2D minimal_rule_odd(double alpha, double beta, Gamma gamma, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("minimal_rule_odd: m must be positive");
    }
    const WeightSpec spec = WeightSpec::square(alpha, beta, gamma);
    const bool minus = gamma == Gamma::minus_half;
    const int degree = static_cast<int>(4 * m + 1);

    // Off-diagonal orbits from the Gauss rule of (1-t) w.
    const std::size_t q = minus ? m : m + 1;
    const QuadratureRule1D g = gauss_jacobi(alpha + 1.0, beta, q);
    std::vector<Orbit> orbits;
    for (std::size_t k = 1; k <= q; ++k) {
        for (std::size_t j = 1; j <= (minus ? k : k - 1); ++j) {
            const auto [s, t] = half_angle_pair(g, {j, k, q});
            orbits.push_back({{{s, t}, {t, s}, {-s, -t}, {-t, -s}}});
        }
    }
    // Diagonal points, paired by central symmetry.
    const std::vector<double> xi = diagonal_zero_set(alpha, beta, m, gamma);
    for (double x : xi) {
        if (x > 0.0) {
            orbits.push_back({{{x, x}, {-x, -x}}});
        } else if (x == 0.0) {
            orbits.push_back({{{0.0, 0.0}}});
        }
    }

    const auto basis = invariant_basis(degree);
    const Eigen::Index rows = static_cast<Eigen::Index>(basis.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(orbits.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);

    std::vector<double> c1, c2;
    auto accumulate_row = [&](double x1, double x2, double w, auto&& sink) {
        chebyshev_values(x1, degree, c1);
        chebyshev_values(x2, degree, c2);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const auto [i, j] = basis[static_cast<std::size_t>(r)];
            sink(r, w * 0.5 * (c1[i] * c2[j] + c1[j] * c2[i]));
        }
    };
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (const Node2& p : orbits[static_cast<std::size_t>(c)].points) {
            accumulate_row(p.x1, p.x2, 1.0, [&](Eigen::Index r, double v) { a(r, c) += v; });
        }
    }
    for_each_invariant_node(spec, static_cast<std::size_t>(degree / 4 + 4), [&](double x1, double x2, double w) {
        accumulate_row(x1, x2, w, [&](Eigen::Index r, double v) { b(r) += v; });
    });

    const Eigen::VectorXd lambda = a.colPivHouseholderQr().solve(b);
    const double residual = (a * lambda - b).norm();
    if (!(residual <= 1e-9 * b.norm())) {
        throw ConstructionError("minimal_rule_odd: moment residual " + std::to_string(residual / b.norm()) +
                                " (relative) exceeds 1e-9 for alpha=" + std::to_string(alpha) +
                                ", beta=" + std::to_string(beta) + ", m=" + std::to_string(m));
    }
    const double min_weight = lambda.minCoeff();
    if (!(min_weight > 0.0)) {
        throw ConstructionError("minimal_rule_odd: nonpositive weight " + std::to_string(min_weight) +
                                " for alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                                ", m=" + std::to_string(m));
    }

    CubatureRule2D rule;
    rule.degree = degree;
    rule.domain = Domain::square;
    rule.family = RuleFamily::square_odd;
    rule.weight = spec;
    rule.param = static_cast<int>(m);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (const Node2& p : orbits[static_cast<std::size_t>(c)].points) {
            rule.nodes.push_back(p);
            rule.weights.push_back(lambda(c));
        }
    }
    sort_and_merge(rule.nodes, rule.weights);
    checked_count(rule.size(), 2 * (m + 1) * (m + 1) - 1, "minimal_rule_odd");
    return rule;
}

double eval_Q_basis(double alpha, double beta, Gamma gamma, std::size_t n, int branch, std::size_t k,
                    double x1, double x2) {
    if (branch != 1 && branch != 2) {
        throw std::invalid_argument("eval_Q_basis: branch must be 1 or 2");
    }
    if (std::abs(x1) > 1.0 || std::abs(x2) > 1.0) {
        throw std::domain_error("eval_Q_basis: point outside [-1,1]^2");
    }
    const std::size_t half = n / 2;
    const bool even = n % 2 == 0;
    std::size_t degree = half;
    double shift_a = 0.0;
    double shift_b = 0.0;
    double factor = 1.0;
    if (even) {
        if (branch == 2) {
            if (half == 0) {
                throw std::out_of_range("eval_Q_basis: branch 2 needs n >= 2");
            }
            degree = half - 1;
            shift_a = shift_b = 1.0;
            factor = x1 * x1 - x2 * x2;
        }
    } else if (branch == 1) {
        shift_b = 1.0;
        factor = x1 + x2;
    } else {
        shift_a = 1.0;
        factor = x1 - x2;
    }
    if (k > degree) {
        throw std::out_of_range("eval_Q_basis: index k=" + std::to_string(k) + " exceeds " +
                                std::to_string(degree));
    }

    const double root = std::sqrt(std::max(0.0, 1.0 - x1 * x1)) * std::sqrt(std::max(0.0, 1.0 - x2 * x2));
    const double c_minus = x1 * x2 + root; // cos(theta1 - theta2)
    const double c_plus = x1 * x2 - root;  // cos(theta1 + theta2)
    const RecurrenceCoeffs rc = jacobi_recurrence(alpha + shift_a, beta + shift_b, degree + 2);

    double core;
    if (gamma == Gamma::minus_half) {
        core = eval_orthonormal(rc, degree, c_minus) * eval_orthonormal(rc, k, c_plus) +
               eval_orthonormal(rc, k, c_minus) * eval_orthonormal(rc, degree, c_plus);
    } else {
        core = eval_koornwinder(rc, degree, k, Gamma::plus_half, map_x_to_u(c_minus, c_plus));
    }
    return factor * core;
}

} // namespace mincub
