#include "mincub/composed.hpp"

#include "angle_cells.hpp"
#include "mincub/squaremin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mincub {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double dedup_tol = 1e-12;

void check_ell(int ell, const char* who) {
    if (ell < 1) {
        throw std::invalid_argument(std::string(who) + ": ell must be at least 1");
    }
}

// Angles (2 nu pi + sign*theta)/ell (shift = 0) or ((2 nu + 1) pi + sign*theta)/ell
// (shift = 1), with nu running over [lo, hi] separately for each sign.
struct SignRange {
    int lo;
    int hi;
};

std::vector<double> angle_set(int ell, double theta, int shift, SignRange plus, SignRange minus) {
    std::vector<double> out;
    for (int nu = plus.lo; nu <= plus.hi; ++nu) {
        out.push_back(((2 * nu + shift) * pi + theta) / ell);
    }
    for (int nu = minus.lo; nu <= minus.hi; ++nu) {
        out.push_back(((2 * nu + shift) * pi - theta) / ell);
    }
    return out;
}

std::vector<double> plus_angles(int ell, double theta) {
    if (ell % 2 == 0) {
        return angle_set(ell, theta, 0, {0, ell / 2 - 1}, {1, ell / 2});
    }
    return angle_set(ell, theta, 0, {0, (ell - 1) / 2}, {1, (ell - 1) / 2});
}

std::vector<double> minus_angles(int ell, double theta) {
    if (ell % 2 == 0) {
        return angle_set(ell, theta, 1, {0, ell / 2 - 1}, {0, ell / 2 - 1});
    }
    return angle_set(ell, theta, 1, {0, (ell - 3) / 2}, {0, (ell - 1) / 2});
}

struct FoldedAngle {
    double x;
    int multiplicity;
};

std::vector<FoldedAngle> fold(const std::vector<double>& angles) {
    std::vector<FoldedAngle> out;
    for (double a : angles) {
        const double x = std::cos(a);
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const FoldedAngle& f) { return std::abs(f.x - x) <= dedup_tol; });
        if (!seen) {
            const bool mirror_fixed = std::abs(x) >= 1.0 - dedup_tol;
            out.push_back({x, mirror_fixed ? 1 : 2});
        }
    }
    std::sort(out.begin(), out.end(), [](const FoldedAngle& a, const FoldedAngle& b) { return a.x < b.x; });
    return out;
}

OrbitSet product_set(int ell, double theta, double phi, const std::vector<double>& a1,
                     const std::vector<double>& a2) {
    OrbitSet set;
    set.theta = theta;
    set.phi = phi;
    set.ell = ell;
    for (const FoldedAngle& u : fold(a1)) {
        for (const FoldedAngle& v : fold(a2)) {
            set.points.push_back({u.x, v.x});
            set.multiplicity.push_back(u.multiplicity * v.multiplicity);
        }
    }
    return set;
}

double chebyshev_mass_moment(int i) {
    // integral of t^i / sqrt(1 - t^2) = pi (i-1)!! / i!! for even i.
    if (i % 2 != 0) return 0.0;
    double v = pi;
    for (int k = 2; k <= i; k += 2) {
        v *= static_cast<double>(k - 1) / k;
    }
    return v;
}

} // namespace

double w_ell_value(const WeightSpec& base, int ell, double t) {
    check_ell(ell, "w_ell_value");
    if (!(std::abs(t) < 1.0)) {
        throw std::domain_error("w_ell_value: |t| must be below 1");
    }
    const double theta = std::acos(t);
    const double big_t = std::cos(ell * theta);
    if (ell == 1) {
        return base.base_density(t);
    }
    return base.base_density(big_t) * std::abs(std::sin(ell * theta)) / std::sin(theta);
}

double composed_op_identity_check(double alpha, double beta, int ell, std::size_t m, std::size_t points) {
    check_ell(ell, "composed_op_identity_check");
    const RecurrenceCoeffs rc = jacobi_recurrence(alpha, beta, m + 1);
    // With t = cos(theta) and psi = ell theta / 2, w^(ell)(t) dt becomes
    // 2^(a+b+1) |sin psi|^(2a+1) |cos psi|^(2b+1) (2/ell) dpsi over psi in [0, ell pi/2].
    const detail::QuarterRules rules(2.0 * alpha + 1.0, 2.0 * beta + 1.0, points);
    const double scale = std::exp2(alpha + beta + 1.0) * 2.0 / ell;
    const std::size_t kmax = static_cast<std::size_t>(ell) * m;

    std::vector<double> sums(kmax, 0.0);
    for (long cell = 0; cell < ell; ++cell) {
        const QuadratureRule1D& g = rules.cell(cell);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double psi = cell * (pi / 2.0) + g.nodes[i];
            const double theta = 2.0 * psi / ell;
            const double pm = eval_orthonormal(rc, m, std::cos(2.0 * psi));
            const double w = scale * g.weights[i] * pm;
            for (std::size_t k = 0; k < kmax; ++k) {
                sums[k] += w * std::cos(static_cast<double>(k) * theta);
            }
        }
    }
    double worst = 0.0;
    for (double s : sums) worst = std::max(worst, std::abs(s));
    return worst;
}

double folding_identity_check(int ell, int i) {
    check_ell(ell, "folding_identity_check");
    if (i < 0) {
        throw std::invalid_argument("folding_identity_check: exponent must be nonnegative");
    }
    constexpr int n = 200;
    double lhs = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double theta = (2.0 * k - 1.0) * pi / (2.0 * n);
        lhs += std::pow(std::cos(ell * theta), i);
    }
    lhs *= pi / n;
    return std::abs(lhs - chebyshev_mass_moment(i));
}

std::pair<OrbitSet, OrbitSet> orbit_sets(int ell, double theta, double phi) {
    check_ell(ell, "orbit_sets");
    if (theta < 0.0 || theta > pi || phi < 0.0 || phi > pi) {
        throw std::domain_error("orbit_sets: angles must lie in [0, pi]");
    }
    OrbitSet minus = product_set(ell, theta, phi, minus_angles(ell, theta), minus_angles(ell, phi));
    OrbitSet plus = product_set(ell, theta, phi, plus_angles(ell, theta), plus_angles(ell, phi));
    return {std::move(minus), std::move(plus)};
}

CubatureRule2D composed_rule(const WeightSpec& spec, std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("composed_rule: m must be positive");
    }
    spec.validate();
    if (spec.family != WeightFamily::square_w_ell) {
        throw std::invalid_argument("composed_rule: expected a composed weight (family square-W-ell)");
    }
    const int ell = spec.ell;
    const QuadratureRule1D g = gauss_rule(spec.base_recurrence(m), m);

    CubatureRule2D rule;
    rule.degree = static_cast<int>(4 * static_cast<std::size_t>(ell) * m - 1);
    rule.domain = Domain::square;
    rule.family = RuleFamily::composed;
    rule.weight = spec;
    rule.param = static_cast<int>(m);

    for (std::size_t k = 1; k <= m; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
            const double tj = std::acos(std::clamp(g.nodes[j - 1], -1.0, 1.0));
            const double tk = std::acos(std::clamp(g.nodes[k - 1], -1.0, 1.0));
            const double theta = 0.5 * std::abs(tj - tk);
            const double phi = 0.5 * (tj + tk);

            const auto [xm_st, xp_st] = orbit_sets(ell, theta, phi);
            const auto [xm_ts, xp_ts] = orbit_sets(ell, phi, theta);
            // Each subset is the preimage of one of the four images of (s, t) and carries
            // that image's weight, shared in proportion to the folded orbit multiplicity.
            double image_weight = 0.5 * g.weights[j - 1] * g.weights[k - 1];
            if (j == k) image_weight *= 0.5;
            std::vector<Node2> pts;
            std::vector<double> wts;
            for (const OrbitSet* set : {&xp_st, &xp_ts, &xm_st, &xm_ts}) {
                const int total = std::accumulate(set->multiplicity.begin(), set->multiplicity.end(), 0);
                for (std::size_t i = 0; i < set->size(); ++i) {
                    pts.push_back(set->points[i]);
                    wts.push_back(image_weight * set->multiplicity[i] / static_cast<double>(total));
                }
            }
            sort_and_merge(pts, wts, dedup_tol);

            const std::size_t expected = j == k ? 2 * ell * ell + 2 * ell : 4 * ell * ell;
            if (pts.size() != expected) {
                throw ConstructionError("composed_rule: orbit (" + std::to_string(j) + "," + std::to_string(k) +
                                        ") has " + std::to_string(pts.size()) + " points, expected " +
                                        std::to_string(expected));
            }
            rule.nodes.insert(rule.nodes.end(), pts.begin(), pts.end());
            rule.weights.insert(rule.weights.end(), wts.begin(), wts.end());
        }
    }
    sort_and_merge(rule.nodes, rule.weights);
    const long long want = moller_bound(2LL * ell * static_cast<long long>(m));
    if (static_cast<long long>(rule.size()) != want) {
        throw ConstructionError("composed_rule: expected " + std::to_string(want) + " nodes, got " +
                                std::to_string(rule.size()));
    }
    return rule;
}

CubatureRule2D composed_rule(const RecurrenceCoeffs& rc, int ell, std::size_t m) {
    WeightSpec spec;
    spec.family = WeightFamily::square_w_ell;
    spec.ell = ell;
    spec.recurrence = rc;
    return composed_rule(spec, m);
}

} // namespace mincub
