#include <doctest.h>

#include "fracwave/field.hpp"
#include "fracwave/rng.hpp"

#include <cmath>

using namespace fracwave;

namespace {

Field random_field(const TorusGrid& g, std::uint64_t seed) {
    Rng rng(seed);
    Field f(g);
    for (auto& v : f.values)
        v = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return f;
}

// O(n^2) reference DFT with the same 1/n^d forward normalization.
SpectralField naive_dft(const Field& f) {
    const TorusGrid& g = f.grid;
    SpectralField out(g);
    const std::size_t total = g.size();
    for (std::size_t ki = 0; ki < total; ++ki) {
        auto kidx = g.unflatten(ki);
        cdouble acc(0.0, 0.0);
        for (std::size_t xi = 0; xi < total; ++xi) {
            auto xidx = g.unflatten(xi);
            double phase = 0.0;
            for (int a = 0; a < g.dim; ++a)
                phase -= 2.0 * M_PI * g.signed_index(kidx[a]) * xidx[a] / g.n;
            acc += f.values[xi] * cdouble(std::cos(phase), std::sin(phase));
        }
        out.coeffs[ki] = acc / double(total);
    }
    return out;
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(TorusGrid(4, 8, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid(1, 12, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid(1, 8, 0.0), std::invalid_argument);
    TorusGrid g(2, 8, 4.0);
    CHECK(g.size() == 64);
    CHECK(g.spacing() == doctest::Approx(0.5));
    // zero frequency exactly once, symmetric except Nyquist
    CHECK(g.signed_index(0) == 0);
    CHECK(g.signed_index(4) == -4);
    CHECK(g.signed_index(7) == -1);
    CHECK(g.frequency(1) == doctest::Approx(2.0 * M_PI / 4.0));
}

TEST_CASE("constant field transforms to a single zero-frequency coefficient") {
    TorusGrid g(2, 8, 5.0);
    Field f(g, cdouble(1.0, 0.0));
    SpectralField c = dft(f);
    CHECK(std::abs(c.coeffs[0] - cdouble(1.0, 0.0)) < 1e-14);
    for (std::size_t i = 1; i < c.coeffs.size(); ++i)
        CHECK(std::abs(c.coeffs[i]) < 1e-14);
}

TEST_CASE("pure mode has a single nonzero coefficient") {
    TorusGrid g(1, 16, 2.0);
    Field f(g);
    const double xi1 = g.frequency(3);
    for (int k = 0; k < g.n; ++k)
        f.values[k] = std::exp(cdouble(0.0, xi1 * g.coordinate(k)));
    SpectralField c = dft(f);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (i == 3)
            CHECK(std::abs(c.coeffs[i] - cdouble(1.0, 0.0)) < 1e-13);
        else
            CHECK(std::abs(c.coeffs[i]) < 1e-13);
    }
}

TEST_CASE("dft matches the direct-summation oracle at n = 8") {
    for (int dim : {1, 2}) {
        TorusGrid g(dim, 8, 3.0);
        Field f = random_field(g, 77 + dim);
        SpectralField fast = dft(f);
        SpectralField slow = naive_dft(f);
        for (std::size_t i = 0; i < fast.coeffs.size(); ++i)
            CHECK(std::abs(fast.coeffs[i] - slow.coeffs[i]) < 1e-13);
    }
}

TEST_CASE("dft norm scaling: ||dft(F)|| = n^{-d/2} ||F|| (plain l2)") {
    TorusGrid g(2, 8, 3.0);
    Field f = random_field(g, 5);
    SpectralField c = dft(f);
    double nf = 0.0, nc = 0.0;
    for (auto& v : f.values) nf += std::norm(v);
    for (auto& v : c.coeffs) nc += std::norm(v);
    CHECK(std::sqrt(nc) ==
          doctest::Approx(std::sqrt(nf) / 8.0).epsilon(1e-12));
}

TEST_CASE("round trip and Parseval to 1e-12 on random fields") {
    for (int dim : {1, 2, 3}) {
        for (int n : {8, 32}) {
            if (dim == 3 && n == 32) continue;  // covered by dim 3, n 8
            TorusGrid g(dim, n, 6.0);
            Field f = random_field(g, 1000 * dim + n);
            Field back = idft(dft(f));
            CHECK(rel_l2_error(back, f) < 1e-12);
            CHECK(std::abs(sobolev_norm(f, 0.0) - l2_norm(f)) <
                  1e-12 * l2_norm(f));
        }
    }
    TorusGrid g3(3, 32, 6.0);
    Field f3 = random_field(g3, 42);
    CHECK(rel_l2_error(idft(dft(f3)), f3) < 1e-12);
}

TEST_CASE("real field has Hermitian-symmetric coefficients") {
    TorusGrid g(2, 8, 2.0);
    Rng rng(9);
    Field f(g);
    for (auto& v : f.values) v = cdouble(rng.uniform(-1.0, 1.0), 0.0);
    SpectralField c = dft(f);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        auto idx = g.unflatten(i);
        std::array<int, 3> neg{};
        for (int a = 0; a < g.dim; ++a) neg[a] = (g.n - idx[a]) % g.n;
        CHECK(std::abs(c.coeffs[i] - std::conj(c.coeffs[g.flatten(neg)])) <
              1e-13);
    }
}

TEST_CASE("fractional_power: identity, eigenfunction, inverse pair") {
    TorusGrid g(1, 32, 4.0);
    Field f(g);
    const double xi1 = g.frequency(5);
    for (int k = 0; k < g.n; ++k)
        f.values[k] = std::exp(cdouble(0.0, xi1 * g.coordinate(k)));

    Field id = fractional_power(f, 0.0);
    CHECK(rel_l2_error(id, f) < 1e-13);

    double s = 0.35;
    Field pow_f = fractional_power(f, s);
    Field expect = cdouble(std::pow(xi1 * xi1, s), 0.0) * f;
    CHECK(rel_l2_error(pow_f, expect) < 1e-12);

    Field round = fractional_power(fractional_power(f, s), -s);
    CHECK(rel_l2_error(round, f) < 1e-12);
}

TEST_CASE("fractional_power zero-mode rules") {
    TorusGrid g(1, 8, 1.0);
    Field f(g, cdouble(1.0, 0.0));  // pure mean
    CHECK_THROWS_AS(fractional_power(f, -0.5, ZeroModeRule::reject),
                    std::invalid_argument);
    Field zeroed = fractional_power(f, -0.5, ZeroModeRule::zero);
    CHECK(max_abs(zeroed) < 1e-14);
    // positive order maps the mean to zero without complaint
    Field pos = fractional_power(f, 0.5);
    CHECK(max_abs(pos) < 1e-14);
}

TEST_CASE("sobolev_norm: one-term sum and monotonicity in s") {
    TorusGrid g(1, 16, 2.0);
    Field f(g);
    const double a = 0.7;
    const double xi1 = g.frequency(2);
    for (int k = 0; k < g.n; ++k)
        f.values[k] = a * std::exp(cdouble(0.0, xi1 * g.coordinate(k)));
    double s = 1.3;
    double expect = a * std::pow(1.0 + xi1 * xi1, 0.5 * s) *
                    std::pow(g.box_length, 0.5);
    CHECK(sobolev_norm(f, s) == doctest::Approx(expect).epsilon(1e-12));

    Field r = random_field(g, 3);
    CHECK(sobolev_norm(r, 0.5) <= sobolev_norm(r, 1.5) * (1 + 1e-14));
}

TEST_CASE("sobolev_norm is a norm: homogeneity and triangle inequality") {
    TorusGrid g(2, 8, 3.0);
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Field a = random_field(g, seed);
        Field b = random_field(g, seed + 100);
        double s = 1.2;
        CHECK(sobolev_norm(cdouble(-2.5, 0.0) * a, s) ==
              doctest::Approx(2.5 * sobolev_norm(a, s)).epsilon(1e-12));
        CHECK(sobolev_norm(a + b, s) <=
              (sobolev_norm(a, s) + sobolev_norm(b, s)) * (1.0 + 1e-12));
    }
}
