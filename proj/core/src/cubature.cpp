#include "mincub/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mincub {

Gamma gamma_from_value(double g) {
    if (g == -0.5) {
        return Gamma::minus_half;
    }
    if (g == 0.5) {
        return Gamma::plus_half;
    }
    throw std::invalid_argument("gamma must be -0.5 or 0.5, got " + std::to_string(g));
}

WeightSpec WeightSpec::biangle(double alpha, double beta, Gamma gamma) {
    WeightSpec s;
    s.family = WeightFamily::biangle_gamma;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = gamma;
    s.validate();
    return s;
}

WeightSpec WeightSpec::square(double alpha, double beta, Gamma gamma) {
    WeightSpec s;
    s.family = WeightFamily::square_w;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = gamma;
    s.validate();
    return s;
}

WeightSpec WeightSpec::composed(double alpha, double beta, int ell) {
    WeightSpec s;
    s.family = WeightFamily::square_w_ell;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = Gamma::minus_half;
    s.ell = ell;
    s.validate();
    return s;
}

RecurrenceCoeffs WeightSpec::base_recurrence(std::size_t m) const {
    if (is_jacobi()) {
        return jacobi_recurrence(alpha, beta, m);
    }
    if (recurrence->size() < m) {
        throw std::out_of_range("WeightSpec: recurrence has " + std::to_string(recurrence->size()) +
                                " coefficients, " + std::to_string(m) + " required");
    }
    return *recurrence;
}

double WeightSpec::base_density(double t) const {
    if (is_jacobi()) {
        return jacobi_density(alpha, beta, t);
    }
    if (!density) {
        throw std::invalid_argument("WeightSpec: no pointwise density for this weight");
    }
    return density(t);
}

void WeightSpec::validate() const {
    if (is_jacobi()) {
        if (!(alpha > -1.0) || !(beta > -1.0)) {
            throw std::invalid_argument("WeightSpec: alpha and beta must exceed -1");
        }
    } else {
        recurrence->validate();
    }
    if (family == WeightFamily::square_w_ell) {
        if (ell < 1) {
            throw std::invalid_argument("WeightSpec: ell must be at least 1");
        }
        if (gamma != Gamma::minus_half) {
            throw std::invalid_argument("WeightSpec: composed weights exist only for gamma = -1/2");
        }
    }
}

std::string to_string(RuleFamily f) {
    switch (f) {
    case RuleFamily::biangle: return "biangle";
    case RuleFamily::square_even: return "square-even";
    case RuleFamily::square_odd: return "square-odd";
    case RuleFamily::composed: return "composed";
    }
    return "?";
}

RuleFamily rule_family_from_string(const std::string& s) {
    if (s == "biangle") return RuleFamily::biangle;
    if (s == "square-even") return RuleFamily::square_even;
    if (s == "square-odd") return RuleFamily::square_odd;
    if (s == "composed") return RuleFamily::composed;
    throw std::invalid_argument("unknown rule family '" + s + "'");
}

double CubatureRule2D::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void basis_values(Basis basis, double x, int degree, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(degree + 1));
    out[0] = 1.0;
    if (basis == Basis::monomial) {
        for (int k = 1; k <= degree; ++k) out[k] = out[k - 1] * x;
        return;
    }
    if (degree >= 1) out[1] = x;
    for (int k = 2; k <= degree; ++k) out[k] = 2.0 * x * out[k - 1] - out[k - 2];
}

namespace {

void check_index(int max_degree, int i, int j) {
    if (i < 0 || j < 0 || i + j > max_degree) {
        throw std::out_of_range("moment (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside table of degree " + std::to_string(max_degree));
    }
}

} // namespace

double MomentTable::at(int i, int j) const {
    check_index(max_degree, i, j);
    return values[static_cast<std::size_t>(i * (max_degree + 1) + j)];
}

double MomentTable::abs_at(int i, int j) const {
    check_index(max_degree, i, j);
    return abs_values[static_cast<std::size_t>(i * (max_degree + 1) + j)];
}

MomentSource MomentTable::source() const {
    return [table = *this](int i, int j) { return table.at(i, j); };
}

void sort_and_merge(std::vector<Node2>& nodes, std::vector<double>& weights, double tol) {
    if (nodes.size() != weights.size()) {
        throw std::invalid_argument("sort_and_merge: nodes and weights differ in length");
    }
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (nodes[a].x1 != nodes[b].x1) return nodes[a].x1 < nodes[b].x1;
        return nodes[a].x2 < nodes[b].x2;
    });

    // Near-equal x1 values can be separated by a node with a different x2 after a plain
    // lexicographic sort, so merging scans forward while x1 stays within tolerance.
    std::vector<bool> used(order.size(), false);
    std::vector<Node2> out_nodes;
    std::vector<double> out_weights;
    for (std::size_t a = 0; a < order.size(); ++a) {
        if (used[a]) continue;
        const Node2 p = nodes[order[a]];
        double w = weights[order[a]];
        for (std::size_t b = a + 1; b < order.size() && nodes[order[b]].x1 - p.x1 <= tol; ++b) {
            if (!used[b] && std::abs(nodes[order[b]].x2 - p.x2) <= tol) {
                w += weights[order[b]];
                used[b] = true;
            }
        }
        out_nodes.push_back(p);
        out_weights.push_back(w);
    }
    // Merged representatives keep the lexicographic order of their first member.
    nodes = std::move(out_nodes);
    weights = std::move(out_weights);
}

} // namespace mincub
