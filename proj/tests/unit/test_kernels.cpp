#include <doctest.h>

#include "fracwave/bessel.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/subordination.hpp"
#include "fracwave/testdata.hpp"

#include <cmath>

using namespace fracwave;
using namespace fracwave::kernels;

namespace {

// Constant function g = 1; every kernel solve of it has the closed Beta
// reduction u = t^(2 sigma) (the stationary solution of the degenerate
// equation with unit Neumann data).
class ConstOne : public ScalarFunction {
public:
    explicit ConstOne(int d) : d_(d) {}
    int dim() const override { return d_; }
    double value(std::span<const double>) const override { return 1.0; }
    std::array<double, 5> gradient(std::span<const double>) const override {
        return {};
    }
private:
    int d_;
};

GaussianSum centered_gaussian(int d, double width = 0.6) {
    GaussianSum::Bump b;
    b.width = width;
    return GaussianSum(d, {b});
}

} // namespace

TEST_CASE("KernelSpec classification and constants") {
    auto low = KernelSpec::make(2, FractionalOrder(0.6));
    CHECK(low.regime == KernelRegime::low);
    CHECK(low.gamma == doctest::Approx(0.4));
    double s = 0.6, gm = 0.4;
    double expect = s * std::sin(gm * M_PI) * std::tgamma(gm) /
                    (M_PI * std::sin(s * M_PI) * std::tgamma(1.0 - s));
    CHECK(low.constant == doctest::Approx(expect).epsilon(1e-14));

    auto high = KernelSpec::make(4, FractionalOrder(0.8));
    CHECK(high.regime == KernelRegime::high);
    CHECK(high.gamma == doctest::Approx(1.2));

    auto lim = KernelSpec::make(3, FractionalOrder(0.5));
    CHECK(lim.regime == KernelRegime::limit);

    auto d5 = KernelSpec::make(5, FractionalOrder(0.6));  // gamma = 1.9
    CHECK(d5.regime == KernelRegime::high);
}

TEST_CASE("KernelSpec rejects gamma outside (0,2)") {
    // d=1, sigma=0.6 -> gamma = -0.1
    CHECK_THROWS_AS(KernelSpec::make(1, FractionalOrder(0.6)),
                    std::invalid_argument);
    // d=5, sigma=0.4 -> gamma = 2.1
    CHECK_THROWS_AS(KernelSpec::make(5, FractionalOrder(0.4)),
                    std::invalid_argument);
}

TEST_CASE("constant data: every kernel route returns t^(2 sigma)") {
    PointQuery q;
    q.t = 0.8;
    SUBCASE("low regime, d = 1, 2, 3") {
        for (auto [d, s] : {std::pair{1, 0.3}, {2, 0.6}, {3, 0.75}}) {
            ConstOne one(d);
            auto spec = KernelSpec::make(d, FractionalOrder(s));
            double u = kernel_low_solve(one, q, spec);
            CHECK(u == doctest::Approx(std::pow(q.t, 2.0 * s)).epsilon(1e-10));
        }
    }
    SUBCASE("high regime, d = 3, 4, 5") {
        for (auto [d, s] : {std::pair{3, 0.25}, {4, 0.8}, {5, 0.55}}) {
            ConstOne one(d);
            auto spec = KernelSpec::make(d, FractionalOrder(s));
            double u = kernel_high_solve(one, q, spec);
            CHECK(u == doctest::Approx(std::pow(q.t, 2.0 * s)).epsilon(1e-9));
        }
    }
    SUBCASE("descent, sigma > 1/2") {
        ConstOne one(1);
        double s = 0.8;
        double u = descent1d_solve(one, q, FractionalOrder(s));
        CHECK(u == doctest::Approx(std::pow(q.t, 2.0 * s)).epsilon(1e-12));
    }
    SUBCASE("classical d = 2 gives t") {
        ConstOne one(2);
        CHECK(classical_d2_solve(one, q) == doctest::Approx(q.t).epsilon(1e-12));
    }
    SUBCASE("spherical mean of 1 in d = 3 gives t") {
        ConstOne one(3);
        CHECK(spherical_mean_solve(one, q, 3) ==
              doctest::Approx(q.t).epsilon(1e-12));
    }
}

TEST_CASE("finite propagation: data outside the ball gives exactly zero") {
    PointQuery q;
    q.t = 0.5;
    GaussianSum::Bump far;
    far.center = {30.0, 30.0, 30.0, 30.0, 30.0};
    far.width = 0.4;

    for (auto [d, s] : {std::pair{1, 0.3}, {2, 0.6}, {3, 0.75}}) {
        GaussianSum g(d, {far});
        CHECK(kernel_low_solve(g, q, KernelSpec::make(d, FractionalOrder(s))) ==
              0.0);
    }
    for (auto [d, s] : {std::pair{3, 0.25}, {4, 0.8}}) {
        GaussianSum g(d, {far});
        CHECK(kernel_high_solve(g, q, KernelSpec::make(d, FractionalOrder(s))) ==
              0.0);
    }
    GaussianSum g1(1, {far});
    CHECK(descent1d_solve(g1, q, FractionalOrder(0.8)) == 0.0);
    GaussianSum g2(2, {far});
    CHECK(classical_d2_solve(g2, q) == 0.0);
}

TEST_CASE("quadrature self-convergence on smooth data") {
    PointQuery q;
    q.x = {0.15, -0.1, 0.05};
    q.t = 0.9;
    GaussianSum g = centered_gaussian(3);
    auto spec = KernelSpec::make(3, FractionalOrder(0.75));
    KernelQuadrature coarse;
    KernelQuadrature fine;
    fine.radial_nodes = 2 * coarse.radial_nodes;
    fine.polar_nodes = 2 * coarse.polar_nodes;
    fine.azimuthal_nodes = 2 * coarse.azimuthal_nodes;
    double a = kernel_low_solve(g, q, spec, coarse);
    double b = kernel_low_solve(g, q, spec, fine);
    CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
}

TEST_CASE("classical d2 equals kernel_low at sigma = 1/2 on a Gaussian") {
    PointQuery q;
    q.x = {0.2, -0.3};
    q.t = 0.7;
    GaussianSum g = centered_gaussian(2);
    // gamma = 1/2 exactly: same integral, same constant
    auto spec = KernelSpec::make(2, FractionalOrder(0.5));
    CHECK(spec.regime == KernelRegime::low);
    double a = classical_d2_solve(g, q);
    double b = kernel_low_solve(g, q, spec);
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("descent formula tends to the half-integral as sigma -> 1/2") {
    PointQuery q;
    q.x = {0.1};
    q.t = 0.8;
    GaussianSum g = centered_gaussian(1);
    // (1/2) int_{x-t}^{x+t} g via dense Gauss-Legendre
    const auto& rule = quad::gauss_legendre(200);
    double ref = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double y[1] = {q.x[0] + q.t * rule.nodes[i]};
        ref += rule.weights[i] * g.value(std::span<const double>(y, 1));
    }
    ref *= 0.5 * q.t;
    double prev = 1e300;
    for (double s : {0.52, 0.505, 0.5001}) {
        double u = descent1d_solve(g, q, FractionalOrder(s));
        double err = std::abs(u - ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-4);

    // sigma = 1/2 exactly evaluates the common limit itself, and the low
    // kernel approaches the same value from below
    double seam = descent1d_solve(g, q, FractionalOrder(0.5));
    CHECK(seam == doctest::Approx(ref).epsilon(1e-10));
    double below = kernel_low_solve(g, q, KernelSpec::make(1, FractionalOrder(0.49)));
    CHECK(std::abs(below - ref) < 0.05 * std::abs(ref));
}

TEST_CASE("regime mismatch and gradient requirements are rejected") {
    PointQuery q;
    q.t = 0.4;
    GaussianSum g = centered_gaussian(3);
    auto low = KernelSpec::make(3, FractionalOrder(0.75));
    auto high = KernelSpec::make(3, FractionalOrder(0.25));
    CHECK_THROWS_AS(kernel_high_solve(g, q, low), std::invalid_argument);
    CHECK_THROWS_AS(kernel_low_solve(g, q, high), std::invalid_argument);
    CHECK_THROWS_AS(descent1d_solve(centered_gaussian(1), q,
                                    FractionalOrder(0.4)),
                    std::invalid_argument);
    PointQuery bad;
    bad.t = 0.0;
    CHECK_THROWS_AS(spherical_mean_solve(g, bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(spherical_mean_solve(g, q, 5), std::invalid_argument);
}

TEST_CASE("kernel vs spectral backend, d = 2 Gaussian (low regime)") {
    // Torus big enough that B(x,t) never wraps and the Gaussian is
    // numerically compactly supported.
    TorusGrid grid(2, 64, 16.0);
    GaussianSum::Bump b;
    b.center = {8.0, 8.0};
    b.width = 0.7;
    GaussianSum g(2, {b});
    Field g_field(grid);
    for (std::size_t i = 0; i < g_field.values.size(); ++i) {
        auto idx = grid.unflatten(i);
        double x[2] = {grid.coordinate(idx[0]), grid.coordinate(idx[1])};
        g_field.values[i] = g.value(std::span<const double>(x, 2));
    }
    FractionalOrder sigma(0.6);
    double t = 0.7;
    auto u_spec = solve_bessel(std::nullopt, g_field, sigma, t, 0.0,
                               NeumannZeroMode::analytic_limit);
    auto spec = KernelSpec::make(2, sigma);

    double worst = 0.0, scale = 0.0;
    for (int k = 24; k <= 40; k += 4) {
        PointQuery q;
        q.x = {grid.coordinate(k), 8.0};
        q.t = t;
        double u_k = kernel_low_solve(g, q, spec);
        double u_s =
            u_spec.field.values[grid.flatten({k, 32, 0})].real();
        worst = std::max(worst, std::abs(u_k - u_s));
        scale = std::max(scale, std::abs(u_s));
    }
    CHECK(worst <= 1e-3 * scale);
}

TEST_CASE("recursion: d_t of the low potential matches the high potential") {
    // FD in t of Im V_{gamma-1} against (t/2) Im V_gamma with
    // Im V_gamma = (2/t) d_t Im V_{gamma-1} (the high form).
    PointQuery q;
    q.x = {0.1, 0.0, -0.2, 0.15};
    q.t = 0.9;
    GaussianSum g = centered_gaussian(4);
    double gamma = 1.2;  // d=4, sigma=0.8
    auto imV_low_at = [&](double t) {
        PointQuery qq = q;
        qq.t = t;
        return im_potential_low(gamma - 1.0, g, qq, 4);
    };
    double h = 1e-4;
    double fd = (imV_low_at(q.t + h) - imV_low_at(q.t - h)) / (2.0 * h);
    double high = im_potential_high(gamma, g, q, 4);
    // Im V_gamma = (2/t) d_t Im V_{gamma-1}  <=>  fd = (t/2) Im V_gamma
    CHECK(fd == doctest::Approx(0.5 * q.t * high).epsilon(1e-3));
}

TEST_CASE("limit studies approach the spherical mean from both sides") {
    PointQuery q;
    q.x = {0.2, -0.1, 0.1};
    q.t = 0.8;
    GaussianSum g = centered_gaussian(3);
    double mean = spherical_mean_solve(g, q, 3);

    // gamma -> 1^- : low regime, sigma -> 1/2^+
    double prev = 1e300;
    for (double s : {0.55, 0.51}) {
        double u = kernel_low_solve(g, q, KernelSpec::make(3, FractionalOrder(s)));
        double d = std::abs(u - mean);
        CHECK(d < prev);
        prev = d;
    }
    // gamma -> 1^+ : high regime, sigma -> 1/2^-
    prev = 1e300;
    for (double s : {0.45, 0.49}) {
        double u =
            kernel_high_solve(g, q, KernelSpec::make(3, FractionalOrder(s)));
        double d = std::abs(u - mean);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("scaling covariance of the low kernel") {
    // g_a(y) = g(y/a), x -> a x, t -> a t multiplies u by a^(2 sigma).
    double a = 1.7, s = 0.6;
    GaussianSum g = centered_gaussian(2);

    class Rescaled : public ScalarFunction {
    public:
        Rescaled(const ScalarFunction& base, double a) : base_(base), a_(a) {}
        int dim() const override { return base_.dim(); }
        double value(std::span<const double> x) const override {
            double y[5];
            for (int i = 0; i < dim(); ++i) y[i] = x[i] / a_;
            return base_.value(std::span<const double>(y, dim()));
        }
        std::array<double, 5> gradient(std::span<const double>) const override {
            return {};
        }
    private:
        const ScalarFunction& base_;
        double a_;
    };

    Rescaled ga(g, a);
    PointQuery q;
    q.x = {0.3, -0.2};
    q.t = 0.5;
    PointQuery qa;
    qa.x = {a * 0.3, -a * 0.2};
    qa.t = a * 0.5;
    auto spec = KernelSpec::make(2, FractionalOrder(s));
    double u = kernel_low_solve(g, q, spec);
    double ua = kernel_low_solve(ga, qa, spec);
    CHECK(ua == doctest::Approx(std::pow(a, 2.0 * s) * u).epsilon(1e-9));
}
