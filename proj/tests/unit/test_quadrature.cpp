#include <doctest.h>

#include "fracwave/quadrature.hpp"

#include <cmath>

using namespace fracwave;
using namespace fracwave::quad;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const Rule& r8 = gauss_legendre(8);
    // int_{-1}^1 x^k dx
    for (int k = 0; k <= 15; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < r8.nodes.size(); ++i)
            acc += r8.weights[i] * std::pow(r8.nodes[i], k);
        double expect = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(acc == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("Gauss-Legendre weights sum to 2") {
    for (int n : {2, 5, 16, 48}) {
        const Rule& r = gauss_legendre(n);
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("Gauss-Jacobi reproduces Beta-function moments") {
    // int_{-1}^1 (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    for (auto [a, b] : {std::pair{0.5, -0.4}, {-0.5, 0.3}, {1.0, -0.9}}) {
        Rule r = gauss_jacobi(24, a, b);
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        double expect = std::pow(2.0, a + b + 1.0) *
                        std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                                 std::lgamma(a + b + 2.0));
        CHECK(sum == doctest::Approx(expect).epsilon(1e-12));

        // First moment against d/da of the Beta integral:
        // int (1-x)^a (1+x)^b x dx = 2^{a+b+1} B(a+1,b+1) (b-a)/(a+b+2)
        double m1 = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            m1 += r.weights[i] * r.nodes[i];
        CHECK(m1 == doctest::Approx(expect * (b - a) / (a + b + 2.0))
                        .epsilon(1e-11));
    }
}

TEST_CASE("Gauss-Jacobi handles a singular endpoint integrand exactly") {
    // int_{-1}^1 (1+x)^{-0.7} cos(x) dx via the rule vs a reference value
    // from substitution + dense Gauss-Legendre on (1+x) = u^{1/0.3}.
    Rule r = gauss_jacobi(40, 0.0, -0.7);
    double mine = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        mine += r.weights[i] * std::cos(r.nodes[i]);

    const Rule& gl = gauss_legendre(200);
    double ref = 0.0;
    // u = (1+x)^{0.3}: integral = (1/0.3) int_0^{2^{0.3}} cos(u^{1/0.3} - 1) du
    double ulim = std::pow(2.0, 0.3);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        double u = 0.5 * ulim * (1.0 + gl.nodes[i]);
        ref += 0.5 * ulim * gl.weights[i] *
               std::cos(std::pow(u, 1.0 / 0.3) - 1.0) / 0.3;
    }
    CHECK(mine == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("integrate_refining converges and reports honest error") {
    auto f = [](double x) { return cdouble(std::exp(-x * x), std::sin(3 * x)); };
    auto res = integrate_refining(f, 0.0, 2.0, 2, 12, 1e-13);
    CHECK(res.converged);
    // Reference: erf and cos pieces
    double re = 0.5 * std::sqrt(M_PI) * std::erf(2.0);
    double im = (1.0 - std::cos(6.0)) / 3.0;
    CHECK(std::abs(res.value - cdouble(re, im)) < 1e-12);
    CHECK(res.abs_error < 1e-10);
}

TEST_CASE("integrate_refining stops at the round-off floor") {
    // A stiff integrand whose refinement bottoms out: should not loop
    // forever and should still be accurate.
    auto f = [](double x) { return cdouble(std::cos(80.0 * x), 0.0); };
    auto res = integrate_refining(f, 0.0, 1.0, 4, 16, 1e-16);
    CHECK(std::abs(res.value.real() - std::sin(80.0) / 80.0) < 1e-12);
}
