#include "mincub/oracle.hpp"

#include "angle_cells.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mincub {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ladder_tol = 1e-13;
constexpr double ladder_settled = 1e-6;
constexpr std::size_t ladder_start = 2;
constexpr std::size_t ladder_max = 512;

struct Level {
    std::vector<double> values;
    std::vector<double> abs_values;
};

// In a = (theta1 - theta2)/2, b = (theta1 + theta2)/2 the weight times the Jacobian is
// 2^(p+q) |sin(ell a) sin(ell b)|^p |cos(ell a) cos(ell b)|^q, times
// (sin^2 b - sin^2 a)^2 when gamma = +1/2. The cell a in [0, 2pi), b in [0, pi) covers
// the angle square twice.
Level split_level(const WeightSpec& spec, int max_degree, Basis basis, std::size_t n) {
    const int ell = spec.family == WeightFamily::square_w_ell ? spec.ell : 1;
    const double p = 2.0 * spec.alpha + 1.0;
    const double q = 2.0 * spec.beta + 1.0;
    const bool plus = spec.gamma == Gamma::plus_half;
    const detail::QuarterRules rules(p, q, n);
    const double scale = 0.5 * std::exp2(p + q) / (static_cast<double>(ell) * ell);

    const int stride = max_degree + 1;
    Level out{std::vector<double>(static_cast<std::size_t>(stride * stride), 0.0),
              std::vector<double>(static_cast<std::size_t>(stride * stride), 0.0)};
    std::vector<double> p1(stride), p2(stride);

    // Each cell is summed separately before it joins the total; with up to 128 ell^2 n^2
    // points the plain running sum loses the last digits the ladder needs.
    std::vector<double> cell(out.values.size());
    std::vector<double> cell_abs(out.values.size());
    for (long ca = 0; ca < 4L * ell; ++ca) {
        const auto& ga = rules.cell(ca);
        for (long cb = 0; cb < 2L * ell; ++cb) {
            const auto& gb = rules.cell(cb);
            std::fill(cell.begin(), cell.end(), 0.0);
            std::fill(cell_abs.begin(), cell_abs.end(), 0.0);
            for (std::size_t ia = 0; ia < n; ++ia) {
                const double a = (ca * (pi / 2.0) + ga.nodes[ia]) / ell;
                for (std::size_t ib = 0; ib < n; ++ib) {
                    const double b = (cb * (pi / 2.0) + gb.nodes[ib]) / ell;
                    double w = scale * ga.weights[ia] * gb.weights[ib];
                    if (plus) {
                        const double sa = std::sin(a);
                        const double sb = std::sin(b);
                        const double d = sb * sb - sa * sa;
                        w *= d * d;
                    }
                    const double x1 = std::cos(a + b);
                    const double x2 = std::cos(b - a);
                    basis_values(basis, x1, max_degree, p1);
                    basis_values(basis, x2, max_degree, p2);
                    for (int i = 0; i <= max_degree; ++i) {
                        const double wi = w * p1[i];
                        double* row = &cell[static_cast<std::size_t>(i * stride)];
                        double* arow = &cell_abs[static_cast<std::size_t>(i * stride)];
                        for (int j = 0; i + j <= max_degree; ++j) {
                            const double v = wi * p2[j];
                            if (((i + j) & 1) == 0) row[j] += v;
                            arow[j] += std::abs(v);
                        }
                    }
                }
            }
            for (std::size_t k = 0; k < cell.size(); ++k) {
                out.values[k] += cell[k];
                out.abs_values[k] += cell_abs[k];
            }
        }
    }
    return out;
}

void check_oracle_spec(const WeightSpec& spec) {
    if (spec.family == WeightFamily::square_w_ell && spec.gamma != Gamma::minus_half) {
        throw std::invalid_argument("square oracle: no reference moments for composed weights with gamma = +1/2");
    }
    spec.validate();
    if (spec.family == WeightFamily::biangle_gamma) {
        throw std::invalid_argument("square oracle: biangle weights use biangle_moment");
    }
    if (!spec.is_jacobi()) {
        throw std::invalid_argument("square oracle: only Jacobi base weights have reference moments");
    }
}

} // namespace

MomentTable square_moment_table(const WeightSpec& spec, int max_degree, Basis basis) {
    if (max_degree < 0) {
        throw std::invalid_argument("square_moment_table: negative degree");
    }
    check_oracle_spec(spec);

    MomentTable table;
    table.max_degree = max_degree;
    table.basis = basis;
    Level prev = split_level(spec, max_degree, basis, ladder_start);
    for (std::size_t n = 2 * ladder_start; n <= ladder_max; n *= 2) {
        Level cur = split_level(spec, max_degree, basis, n);
        double change = 0.0;
        for (std::size_t k = 0; k < cur.values.size(); ++k) {
            if (cur.abs_values[k] > 0.0) {
                change = std::max(change, std::abs(cur.values[k] - prev.values[k]) / cur.abs_values[k]);
            }
        }
        table.ladder.push_back(change);
        prev = std::move(cur);
        // One agreement between two coarse levels can be accidental; the level before
        // must already be in the converging regime.
        const bool settled = table.ladder.size() >= 2 && table.ladder[table.ladder.size() - 2] <= ladder_settled;
        if (change <= ladder_tol && settled) {
            table.values = std::move(prev.values);
            table.abs_values = std::move(prev.abs_values);
            table.points_per_axis = n;
            return table;
        }
    }
    char last[32];
    std::snprintf(last, sizeof last, "%.3e", table.ladder.back());
    throw ConvergenceError("square_moment_table: no convergence up to " + std::to_string(ladder_max) +
                           " points per cell; last scaled change " + last);
}

double square_moment(const WeightSpec& spec, int i, int j) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("square_moment: exponents must be nonnegative");
    }
    if ((i + j) % 2 != 0) {
        check_oracle_spec(spec);
        return 0.0;
    }
    return square_moment_table(spec, i + j).at(i, j);
}

double composed_moment(const WeightSpec& spec, int i, int j) {
    if (spec.family != WeightFamily::square_w_ell) {
        throw std::invalid_argument("composed_moment: expected a composed weight");
    }
    return square_moment(spec, i, j);
}

double composed_moment(int ell, int i, int j) {
    return composed_moment(WeightSpec::composed(-0.5, -0.5, ell), i, j);
}

namespace {

constexpr double roundoff_floor = 64 * std::numeric_limits<double>::epsilon();

ExactnessReport certify_impl(const CubatureRule2D& rule, Basis basis, double x1_scale, const MomentSource& moments,
                             const MomentSource& abs_moments, int max_degree, double rel_tol) {
    if (max_degree < 0) {
        throw std::invalid_argument("certify: negative degree");
    }
    if (rule.nodes.empty()) {
        throw std::invalid_argument("certify: empty rule");
    }
    ExactnessReport report;
    report.basis = basis;
    report.max_degree_tested = max_degree;
    const double mass = moments(0, 0);

    const std::size_t stride = static_cast<std::size_t>(max_degree + 1);
    std::vector<double> quad(stride * stride, 0.0);
    std::vector<double> sup(stride * stride, 0.0);
    std::vector<double> p1, p2;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        basis_values(basis, x1_scale * rule.nodes[k].x1, max_degree, p1);
        basis_values(basis, rule.nodes[k].x2, max_degree, p2);
        for (std::size_t i = 0; i < stride; ++i) {
            for (std::size_t j = 0; i + j < stride; ++j) {
                const double v = p1[i] * p2[j];
                quad[i * stride + j] += rule.weights[k] * v;
                sup[i * stride + j] = std::max(sup[i * stride + j], std::abs(v));
            }
        }
    }

    int certified = -1;
    bool intact = true;
    for (int d = 0; d <= max_degree; ++d) {
        bool degree_ok = true;
        for (int i = d; i >= 0; --i) {
            const int j = d - i;
            const std::size_t idx = static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j);
            const double exact = moments(i, j);
            double denom = std::max(std::abs(exact), std::abs(mass) * sup[idx]);
            if (abs_moments) denom = std::max(denom, abs_moments(i, j));
            // Differences within a few ulps of the total mass are roundoff, whatever the monomial.
            const double diff = std::abs(quad[idx] - exact);
            const double err = diff <= roundoff_floor * std::abs(mass) ? 0.0 : denom > 0.0 ? diff / denom : diff;
            report.worst_rel_error = std::max(report.worst_rel_error, err);
            if (!(err <= rel_tol)) {
                degree_ok = false;
                report.failures.push_back({i, j, err});
            }
        }
        if (intact && degree_ok) {
            certified = d;
        } else {
            intact = false;
        }
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const MonomialError& a, const MonomialError& b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
        return a.i < b.i;
    });
    report.certified_degree = certified;
    return report;
}

} // namespace

ExactnessReport certify(const CubatureRule2D& rule, const MomentSource& moments, int max_degree, double rel_tol) {
    return certify_impl(rule, Basis::monomial, 1.0, moments, {}, max_degree, rel_tol);
}

ExactnessReport certify(const CubatureRule2D& rule, const MomentTable& table, int max_degree, double rel_tol) {
    if (max_degree > table.max_degree) {
        throw std::out_of_range("certify: table covers degree " + std::to_string(table.max_degree) + " only");
    }
    return certify_impl(
        rule, table.basis, table.x1_scale, [&](int i, int j) { return table.at(i, j); },
        [&](int i, int j) { return table.abs_at(i, j); }, max_degree, rel_tol);
}

} // namespace mincub
