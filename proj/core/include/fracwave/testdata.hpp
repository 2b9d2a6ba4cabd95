#pragma once

#include "fracwave/field.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fracwave {

/// A function of a point in R^d that can be evaluated anywhere, with its
/// gradient. Ball-kernel quadratures sample these off the grid.
class ScalarFunction {
public:
    virtual ~ScalarFunction() = default;
    virtual int dim() const = 0;
    virtual double value(std::span<const double> x) const = 0;
    virtual std::array<double, 5> gradient(std::span<const double> x) const = 0;
};

/// Sum of isotropic Gaussian bumps a_j exp(-|x-c_j|^2 / (2 w_j^2)).
class GaussianSum : public ScalarFunction {
public:
    struct Bump {
        std::array<double, 5> center{};
        double width = 1.0;
        double amplitude = 1.0;
    };

    GaussianSum(int dim, std::vector<Bump> bumps);

    int dim() const override { return dim_; }
    double value(std::span<const double> x) const override;
    std::array<double, 5> gradient(std::span<const double> x) const override;
    const std::vector<Bump>& bumps() const { return bumps_; }

private:
    int dim_;
    std::vector<Bump> bumps_;
};

/// Real trigonometric polynomial sum_j a_j cos(k_j . x + phi_j) with wave
/// vectors on a torus lattice. Exactly band-limited: sampling it on the
/// matching grid and convolving with a compactly supported kernel agree
/// with the spectral solve to rounding.
class TrigPolynomial : public ScalarFunction {
public:
    struct Mode {
        std::array<double, 3> wavevector{};
        double amplitude = 1.0;
        double phase = 0.0;
    };

    TrigPolynomial(int dim, std::vector<Mode> modes);

    int dim() const override { return dim_; }
    double value(std::span<const double> x) const override;
    std::array<double, 5> gradient(std::span<const double> x) const override;

    Field sample(const TorusGrid& grid) const;

private:
    int dim_;
    std::vector<Mode> modes_;
};

/// Deterministic band-limited test function: `count` random lattice modes
/// with |xi| inside [band_lo, band_hi].
TrigPolynomial random_trig_polynomial(const TorusGrid& grid, double band_lo,
                                      double band_hi, int count,
                                      std::uint64_t seed);

/// Evaluates a grid field anywhere by summing its Fourier series
/// (trigonometric interpolation; exact for band-limited data).
class SpectralInterpolant : public ScalarFunction {
public:
    explicit SpectralInterpolant(const Field& field);

    int dim() const override { return coeffs_.grid.dim; }
    double value(std::span<const double> x) const override;
    std::array<double, 5> gradient(std::span<const double> x) const override;

private:
    SpectralField coeffs_;
};

struct BandSpec {
    double r_lo = 0.0;
    double r_hi = 0.0;
};

struct TestData {
    Field field;
    std::vector<Field> gradient;  // one field per axis, spectral derivative
};

/// Real field built from Gaussian bumps, optionally band-pass filtered to
/// the annulus [r_lo, r_hi] in |xi| with a smooth cutoff, plus its
/// spectrally evaluated gradient. A band excluding xi = 0 zeroes the mean
/// exactly.
TestData make_test_data(const TorusGrid& grid,
                        std::span<const GaussianSum::Bump> bumps,
                        const std::optional<BandSpec>& band);

/// Convenience: one centered bump, band-passed to a default annulus that
/// excludes the origin and stays well inside the Nyquist radius.
TestData default_band_passed_bump(const TorusGrid& grid);

} // namespace fracwave
