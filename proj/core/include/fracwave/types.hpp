#pragma once

#include <complex>
#include <stdexcept>

namespace fracwave {

using cdouble = std::complex<double>;

/// Numerical failure (a quadrature or extrapolation did not reach its
/// accuracy target). Distinct from std::invalid_argument, which is used
/// for precondition violations.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fractional order sigma in (0,1) together with the branch constants
/// i^alpha = exp(i pi alpha / 2) and the Dirichlet-to-Neumann constant
/// -i^(2 sigma) Gamma(1-sigma) / (sigma 4^sigma Gamma(sigma)).
///
/// The endpoints are rejected: the oscillatory Gamma identity that the
/// whole symbol calculus rests on fails at sigma = 1.
class FractionalOrder {
public:
    explicit FractionalOrder(double sigma);

    double sigma() const { return sigma_; }

    /// Principal branch i^alpha = exp(i pi alpha / 2). Exact at integer alpha.
    static cdouble i_pow(double alpha);

    cdouble i_sigma() const { return i_pow(sigma_); }
    cdouble i_neg_sigma() const { return i_pow(-sigma_); }
    cdouble i_two_sigma() const { return i_pow(2.0 * sigma_); }
    cdouble i_one_minus_two_sigma() const { return i_pow(1.0 - 2.0 * sigma_); }
    cdouble i_sigma_minus_half_dim(int d) const { return i_pow(sigma_ - 0.5 * d); }

    /// -i^(2 sigma) Gamma(1-sigma) / (sigma 4^sigma Gamma(sigma)).
    /// Equals -i exactly at sigma = 1/2.
    cdouble dtn_constant() const;

private:
    double sigma_;
};

} // namespace fracwave
