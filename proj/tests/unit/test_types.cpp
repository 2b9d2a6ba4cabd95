#include <doctest.h>

#include "fracwave/types.hpp"

#include <cmath>

using namespace fracwave;

TEST_CASE("FractionalOrder rejects the endpoints") {
    CHECK_THROWS_AS(FractionalOrder(0.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(1.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(1.7), std::invalid_argument);
    CHECK_NOTHROW(FractionalOrder(1e-9));
    CHECK_NOTHROW(FractionalOrder(1.0 - 1e-9));
}

TEST_CASE("branch constants are unimodular") {
    for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        FractionalOrder sigma(s);
        for (cdouble c : {sigma.i_sigma(), sigma.i_neg_sigma(),
                          sigma.i_two_sigma(), sigma.i_one_minus_two_sigma(),
                          sigma.i_sigma_minus_half_dim(1),
                          sigma.i_sigma_minus_half_dim(3)}) {
            CHECK(std::abs(std::abs(c) - 1.0) < 1e-15);
        }
    }
}

TEST_CASE("i_pow follows the principal convention e^{i pi alpha/2}") {
    cdouble c = FractionalOrder::i_pow(0.6);
    CHECK(c.real() == doctest::Approx(std::cos(M_PI * 0.3)).epsilon(1e-15));
    CHECK(c.imag() == doctest::Approx(std::sin(M_PI * 0.3)).epsilon(1e-15));
    CHECK(FractionalOrder::i_pow(2.0) == cdouble(-1.0, 0.0));
    CHECK(FractionalOrder::i_pow(-1.0) == cdouble(0.0, -1.0));
}

TEST_CASE("DtN constant equals -i exactly at sigma = 1/2") {
    cdouble c = FractionalOrder(0.5).dtn_constant();
    CHECK(c.real() == 0.0);
    CHECK(c.imag() == -1.0);
}

TEST_CASE("DtN constant general value") {
    // -i^{2s} Gamma(1-s) / (s 4^s Gamma(s))
    double s = 0.3;
    cdouble c = FractionalOrder(s).dtn_constant();
    double mag = std::tgamma(1.0 - s) / (s * std::pow(4.0, s) * std::tgamma(s));
    cdouble expect = -std::exp(cdouble(0.0, M_PI * s)) * mag;
    CHECK(std::abs(c - expect) < 1e-15);
}
