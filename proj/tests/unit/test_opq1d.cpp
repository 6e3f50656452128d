#include "support.hpp"

#include "mincub/opq1d.hpp"
#include "mincub/tridiagonal.hpp"

#include <doctest.h>

#include <vector>

using namespace mincub;
using testing::pi;
using testing::rel_err;

namespace {

double gen_binom(double top, int k) {
    return std::tgamma(top + 1.0) / (std::tgamma(top - k + 1.0) * std::tgamma(k + 1.0));
}

// Explicit sum form of P_n^{(a,b)}, independent of the three-term recurrence.
double jacobi_sum_form(double a, double b, int n, double x) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += gen_binom(n + a, n - k) * gen_binom(n + b, k) * std::pow((x - 1.0) / 2.0, k) *
             std::pow((x + 1.0) / 2.0, n - k);
    }
    return s;
}

double beta_fn(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }

} // namespace

TEST_CASE("tridiagonal eigenvalues of the path graph") {
    for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
        std::vector<double> d(n, 0.0), e(n - 1, 1.0);
        const auto eig = symmetric_tridiagonal_eigen(d, e);
        REQUIRE(eig.values.size() == n);
        for (std::size_t k = 0; k < n; ++k) {
            // ascending order: k-th smallest is 2 cos((n - k) pi / (n + 1))
            const double angle = static_cast<double>(n - k) * pi / static_cast<double>(n + 1);
            CHECK(eig.values[k] == doctest::Approx(2.0 * std::cos(angle)).epsilon(1e-13));
            const double comp = std::sqrt(2.0 / static_cast<double>(n + 1)) * std::sin(angle);
            CHECK(std::abs(eig.first_components[k]) == doctest::Approx(std::abs(comp)).epsilon(1e-12));
        }
    }
}

TEST_CASE("tridiagonal invariants on random matrices") {
    auto g = testing::rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(g, 1, 30));
        std::vector<double> d(n), e(n - 1);
        for (auto& v : d) v = testing::uniform(g, -3.0, 3.0);
        for (auto& v : e) v = testing::uniform(g, 0.1, 2.0);
        const auto eig = symmetric_tridiagonal_eigen(d, e);
        double trace = 0.0, frob = 0.0, lsum = 0.0, l2 = 0.0, comp = 0.0;
        for (double v : d) {
            trace += v;
            frob += v * v;
        }
        for (double v : e) frob += 2.0 * v * v;
        for (std::size_t k = 0; k < n; ++k) {
            lsum += eig.values[k];
            l2 += eig.values[k] * eig.values[k];
            comp += eig.first_components[k] * eig.first_components[k];
            if (k > 0) CHECK(eig.values[k] > eig.values[k - 1]);
        }
        CHECK(std::abs(lsum - trace) <= 1e-12 * (1.0 + frob));
        CHECK(rel_err(l2, frob) <= 1e-12);
        CHECK(comp == doctest::Approx(1.0).epsilon(1e-13));
    }
    std::vector<double> none;
    CHECK_THROWS_AS(symmetric_tridiagonal_eigen(none, none), std::invalid_argument);
}

TEST_CASE("jacobi_recurrence examples") {
    const auto cheb = jacobi_recurrence(-0.5, -0.5, 1);
    CHECK(cheb.mu0 == doctest::Approx(pi).epsilon(1e-15));
    CHECK(cheb.a[0] == 0.0);

    const auto leg = jacobi_recurrence(0.0, 0.0, 2);
    CHECK(leg.mu0 == doctest::Approx(2.0));
    CHECK(leg.a[0] == 0.0);
    CHECK(leg.a[1] == 0.0);
    CHECK(leg.b_at(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    const auto r = jacobi_recurrence(0.5, -0.5, 1);
    CHECK(r.a[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r.mu0 == doctest::Approx(pi).epsilon(1e-14));

    CHECK_THROWS_AS(jacobi_recurrence(-1.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_recurrence(0.0, 0.0, 0), std::invalid_argument);
}

TEST_CASE("jacobi_recurrence mass is the Beta integral") {
    auto g = testing::rng(12);
    for (int rep = 0; rep < 25; ++rep) {
        const double a = testing::uniform(g, -0.95, 3.0);
        const double b = testing::uniform(g, -0.95, 3.0);
        const auto rc = jacobi_recurrence(a, b, 8);
        CHECK(rel_err(rc.mu0, std::pow(2.0, a + b + 1.0) * beta_fn(a + 1.0, b + 1.0)) <= 1e-12);
        CHECK_NOTHROW(rc.validate());
    }
}

TEST_CASE("eval_orthonormal examples") {
    const auto cheb = jacobi_recurrence(-0.5, -0.5, 4);
    for (double t : {-0.9, 0.0, 0.3}) CHECK(eval_orthonormal(cheb, 0, t) == doctest::Approx(1.0 / std::sqrt(pi)));
    CHECK(eval_orthonormal(cheb, 2, 0.0) == doctest::Approx(-std::sqrt(2.0 / pi)).epsilon(1e-14));
    const auto leg = jacobi_recurrence(0.0, 0.0, 3);
    CHECK(eval_orthonormal(leg, 1, 1.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
    CHECK_THROWS(eval_orthonormal(leg, 3, 0.1));
}

TEST_CASE("orthonormal Chebyshev is sqrt(2/pi) T_n") {
    const auto rc = jacobi_recurrence(-0.5, -0.5, 40);
    auto g = testing::rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = testing::uniform_int(g, 1, 39);
        const double t = testing::uniform(g, -1.0, 1.0);
        const double want = std::sqrt(2.0 / pi) * std::cos(n * std::acos(t));
        CHECK(std::abs(eval_orthonormal(rc, static_cast<std::size_t>(n), t) - want) <= 1e-12);
    }
}

TEST_CASE("orthonormal derivative matches a central difference") {
    const auto rc = jacobi_recurrence(0.3, -0.4, 12);
    auto g = testing::rng(14);
    for (int rep = 0; rep < 30; ++rep) {
        const auto n = static_cast<std::size_t>(testing::uniform_int(g, 0, 11));
        const double t = testing::uniform(g, -0.9, 0.9);
        const double h = 1e-6;
        const double fd = (eval_orthonormal(rc, n, t + h) - eval_orthonormal(rc, n, t - h)) / (2 * h);
        const auto vd = eval_orthonormal_d(rc, n, t);
        CHECK(vd.value == doctest::Approx(eval_orthonormal(rc, n, t)).epsilon(1e-14));
        CHECK(std::abs(vd.derivative - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
}

TEST_CASE("eval_jacobi_standard examples and sum form") {
    auto g = testing::rng(15);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = testing::uniform(g, -0.9, 2.0);
        const double b = testing::uniform(g, -0.9, 2.0);
        const double t = testing::uniform(g, -1.0, 1.0);
        CHECK(eval_jacobi_standard(a, b, 0, t) == 1.0);
        CHECK(eval_jacobi_standard(a, b, 1, t) == doctest::Approx((a + b + 2) * t / 2 + (a - b) / 2).epsilon(1e-14));
        const int n = testing::uniform_int(g, 2, 14);
        const double want = jacobi_sum_form(a, b, n, t);
        CHECK(std::abs(eval_jacobi_standard(a, b, static_cast<std::size_t>(n), t) - want) <=
              1e-11 * std::max(1.0, std::abs(jacobi_sum_form(a, b, n, 1.0))));
        CHECK(rel_err(eval_jacobi_standard(a, b, static_cast<std::size_t>(n), 1.0), gen_binom(n + a, n)) <= 1e-12);
        const double h = 1e-6;
        const double fd = (eval_jacobi_standard(a, b, n, t + h) - eval_jacobi_standard(a, b, n, t - h)) / (2 * h);
        CHECK(std::abs(eval_jacobi_standard_derivative(a, b, n, t) - fd) <= 1e-5 * (1.0 + std::abs(fd)));
    }
    CHECK(eval_jacobi_standard(0.0, 0.0, 2, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("gauss_rule examples") {
    const auto c1 = gauss_rule(jacobi_recurrence(-0.5, -0.5, 1), 1);
    REQUIRE(c1.size() == 1);
    CHECK(std::abs(c1.nodes[0]) <= 1e-15);
    CHECK(c1.weights[0] == doctest::Approx(pi).epsilon(1e-15));

    const auto c2 = gauss_jacobi(-0.5, -0.5, 2);
    CHECK(c2.nodes[0] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
    CHECK(c2.nodes[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(c2.weights[0] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(c2.weights[1] == doctest::Approx(pi / 2).epsilon(1e-15));

    const auto l2 = gauss_jacobi(0.0, 0.0, 2);
    CHECK(l2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(l2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(l2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(l2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS(gauss_rule(jacobi_recurrence(0.0, 0.0, 3), 4));
    CHECK_THROWS(gauss_rule(jacobi_recurrence(0.0, 0.0, 3), 0));
}

TEST_CASE("Gauss-Chebyshev closed form") {
    for (std::size_t m : {3u, 10u, 31u, 64u}) {
        const auto g = gauss_jacobi(-0.5, -0.5, m);
        for (std::size_t k = 0; k < m; ++k) {
            const double want = -std::cos((2.0 * k + 1.0) * pi / (2.0 * m));
            CHECK(std::abs(g.nodes[k] - want) <= 1e-14);
            CHECK(rel_err(g.weights[k], pi / m) <= 1e-12);
        }
    }
}

TEST_CASE("Gauss rules: exactness, interlacing, zeros and symmetry") {
    auto g = testing::rng(16);
    for (int rep = 0; rep < 15; ++rep) {
        const double a = testing::uniform(g, -0.9, 2.5);
        const double b = rep % 3 == 0 ? a : testing::uniform(g, -0.9, 2.5);
        const auto m = static_cast<std::size_t>(testing::uniform_int(g, 1, 25));
        const auto rc = jacobi_recurrence(a, b, m + 5);
        const auto q = gauss_rule(rc, m);
        const auto ref = gauss_rule(rc, m + 5);
        const auto next = gauss_rule(rc, m + 1);

        double mass = 0.0;
        for (double w : q.weights) {
            CHECK(w > 0.0);
            mass += w;
        }
        CHECK(rel_err(mass, rc.mu0) <= 1e-13);

        for (std::size_t j = 0; j < 2 * m; ++j) {
            double s = 0.0, r = 0.0, sa = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += q.weights[k] * std::pow(q.nodes[k], static_cast<double>(j));
            for (std::size_t k = 0; k < ref.size(); ++k) {
                const double v = ref.weights[k] * std::pow(ref.nodes[k], static_cast<double>(j));
                r += v;
                sa += std::abs(v);
            }
            CHECK(std::abs(s - r) <= 1e-12 * sa);
        }

        for (std::size_t k = 0; k < m; ++k) {
            CHECK(next.nodes[k] < q.nodes[k]);
            CHECK(q.nodes[k] < next.nodes[k + 1]);
            CHECK(q.nodes[k] > -1.0);
            CHECK(q.nodes[k] < 1.0);
        }

        double scale = 0.0;
        for (int i = 0; i <= 1000; ++i) scale = std::max(scale, std::abs(eval_orthonormal(rc, m, -1.0 + i / 500.0)));
        for (double t : q.nodes) CHECK(std::abs(eval_orthonormal(rc, m, t)) <= 1e-10 * scale);

        if (a == b) {
            for (std::size_t k = 0; k < m; ++k) {
                CHECK(std::abs(q.nodes[k] + q.nodes[m - 1 - k]) <= 1e-13);
                CHECK(rel_err(q.weights[k], q.weights[m - 1 - k]) <= 1e-13);
            }
        }
    }
}

TEST_CASE("quasi_s values") {
    // plus_half is the difference of the two products, so it vanishes at t = +-1.
    for (std::size_t m : {1u, 2u, 5u}) {
        CHECK(quasi_s(0.2, -0.3, m, Gamma::plus_half, 1.0) == 0.0);
        CHECK(quasi_s(0.2, -0.3, m, Gamma::plus_half, -1.0) == 0.0);
    }
    // minus_half at t = 1, (0,0), m = 1: 2 P_1^{(0,1)}(1) P_1^{(1,0)}(1) = 2 * 1 * 2.
    CHECK(quasi_s(0.0, 0.0, 1, Gamma::minus_half, 1.0) == doctest::Approx(4.0).epsilon(1e-15));

    auto g = testing::rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        const double a = testing::uniform(g, -0.9, 2.0);
        const double b = testing::uniform(g, -0.9, 2.0);
        const auto m = static_cast<std::size_t>(testing::uniform_int(g, 1, 10));
        const double t = testing::uniform(g, -1.0, 1.0);
        for (Gamma s : {Gamma::minus_half, Gamma::plus_half}) {
            CHECK(quasi_s(a, b, m, s, t) == quasi_s(a, b, m, s, -t));
            const double z = 2 * t * t - 1;
            const int n = static_cast<int>(m);
            const double pa = jacobi_sum_form(a, b + 1, n, 1.0) * jacobi_sum_form(a + 1, b, n, z);
            const double pb = jacobi_sum_form(a, b + 1, n, z) * jacobi_sum_form(a + 1, b, n, 1.0);
            const double want = s == Gamma::minus_half ? pa + pb : pa - pb;
            const double scale = jacobi_sum_form(a, b + 1, n, 1.0) * jacobi_sum_form(a + 1, b, n, 1.0);
            CHECK(std::abs(quasi_s(a, b, m, s, t) - want) <= 1e-10 * scale);
            const double h = 1e-6;
            const double fd = (quasi_s(a, b, m, s, t + h) - quasi_s(a, b, m, s, t - h)) / (2 * h);
            CHECK(std::abs(quasi_s_derivative(a, b, m, s, t) - fd) <= 1e-5 * (scale + std::abs(fd)));
        }
    }
}

TEST_CASE("diagonal_zero_set") {
    const double grid[] = {-0.5, 0.0, 0.5};
    for (double a : grid) {
        for (double b : grid) {
            for (std::size_t m = 1; m <= 8; ++m) {
                for (Gamma s : {Gamma::minus_half, Gamma::plus_half}) {
                    const auto z = diagonal_zero_set(a, b, m, s);
                    REQUIRE(z.size() == 2 * m + 1);
                    CHECK(z[m] == 0.0);
                    const std::size_t order = s == Gamma::minus_half ? m : m + 1;
                    double scale = 0.0;
                    for (int i = 0; i <= 200; ++i) scale = std::max(scale, std::abs(quasi_s(a, b, order, s, i / 200.0)));
                    for (std::size_t k = 0; k < z.size(); ++k) {
                        CHECK(std::abs(z[k] + z[2 * m - k]) <= 1e-14);
                        CHECK(std::abs(z[k]) < 1.0);
                        if (k > 0) CHECK(z[k] > z[k - 1]);
                        if (k != m) CHECK(std::abs(quasi_s(a, b, order, s, z[k])) <= 1e-11 * scale);
                    }
                }
            }
        }
    }
}

TEST_CASE("diagonal_zero_set Chebyshev m = 1") {
    // P_1^{(-1/2,1/2)}(z) = z - 1/2 and P_1^{(1/2,-1/2)}(z) = z + 1/2, so with the sum sign
    // S = (z + 1/2)/2 + 3(z - 1/2)/2 = 2z - 1/2, zero at z = 1/4, t^2 = 5/8.
    const auto z = diagonal_zero_set(-0.5, -0.5, 1, Gamma::minus_half);
    REQUIRE(z.size() == 3);
    CHECK(z[2] == doctest::Approx(std::sqrt(5.0 / 8.0)).epsilon(1e-14));
    CHECK(z[0] == doctest::Approx(-std::sqrt(5.0 / 8.0)).epsilon(1e-14));
}
