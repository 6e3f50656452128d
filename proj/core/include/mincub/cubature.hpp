#ifndef MINCUB_CUBATURE_HPP
#define MINCUB_CUBATURE_HPP

#include "mincub/common.hpp"
#include "mincub/opq1d.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mincub {

enum class WeightFamily { biangle_gamma, square_w, square_w_ell };

/// A 2D weight built from a 1D weight w on [-1,1]. When `recurrence` is empty, w is the
/// Jacobi weight with parameters (alpha, beta); otherwise the recurrence describes w and
/// `density`, if present, evaluates it pointwise.
struct WeightSpec {
    WeightFamily family = WeightFamily::square_w;
    double alpha = -0.5;
    double beta = -0.5;
    Gamma gamma = Gamma::minus_half;
    int ell = 1;
    std::optional<RecurrenceCoeffs> recurrence;
    std::function<double(double)> density;

    static WeightSpec biangle(double alpha, double beta, Gamma gamma);
    static WeightSpec square(double alpha, double beta, Gamma gamma);
    static WeightSpec composed(double alpha, double beta, int ell);

    bool is_jacobi() const noexcept { return !recurrence.has_value(); }
    /// Recurrence of w with at least m coefficients.
    RecurrenceCoeffs base_recurrence(std::size_t m) const;
    /// w(t).
    double base_density(double t) const;
    void validate() const;
};

enum class Domain { biangle, square };
enum class RuleFamily { biangle, square_even, square_odd, composed };

std::string to_string(RuleFamily f);
RuleFamily rule_family_from_string(const std::string& s);

struct Node2 {
    double x1;
    double x2;

    friend bool operator==(const Node2&, const Node2&) = default;
};

/// Nodes are (x1, x2) on the square and (u1, u2) on the biangle.
struct CubatureRule2D {
    std::vector<Node2> nodes;
    std::vector<double> weights;
    int degree = 0;
    Domain domain = Domain::square;
    RuleFamily family = RuleFamily::square_even;
    WeightSpec weight;
    int param = 0; // n for biangle rules, m otherwise

    std::size_t size() const noexcept { return nodes.size(); }
    double total_weight() const;

    template <class F>
    double apply(F&& f) const {
        double s = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            s += weights[k] * f(nodes[k].x1, nodes[k].x2);
        }
        return s;
    }
};

/// Integral of x1^i x2^j (or u1^i u2^j on the biangle) against a rule's weight.
using MomentSource = std::function<double(int, int)>;

/// Product basis used for moment tables: x1^i x2^j or T_i(x1) T_j(x2).
enum class Basis { monomial, chebyshev };

/// Basis value b_i(x) for 0 <= i <= degree.
void basis_values(Basis basis, double x, int degree, std::vector<double>& out);

/// Moments of b_i(x1) b_j(x2) for all i + j <= max_degree, with the integrals of
/// |b_i(x1) b_j(x2)| and, for ladder-based tables, the per-level disagreement.
struct MomentTable {
    int max_degree = 0;
    Basis basis = Basis::monomial;
    double x1_scale = 1.0;          // b_i is evaluated at x1_scale * x1 (0.5 maps u1 onto [-1,1])
    std::vector<double> values;     // stride max_degree + 1
    std::vector<double> abs_values;
    std::vector<double> ladder;
    std::size_t points_per_axis = 0;

    double at(int i, int j) const;
    double abs_at(int i, int j) const;
    MomentSource source() const;
};

/// Sorts nodes lexicographically and merges nodes whose coordinates both agree within
/// `tol`, summing their weights.
void sort_and_merge(std::vector<Node2>& nodes, std::vector<double>& weights, double tol = 1e-12);

} // namespace mincub

#endif
