#pragma once

#include "fracwave/grid.hpp"
#include "fracwave/types.hpp"

#include <vector>

namespace fracwave {

/// Complex samples indexed by grid points.
struct Field {
    TorusGrid grid;
    std::vector<cdouble> values;

    Field(TorusGrid g, cdouble fill = cdouble(0.0, 0.0))
        : grid(g), values(g.size(), fill) {}
    Field(TorusGrid g, std::vector<cdouble> v);
};

/// Complex Fourier coefficients indexed by the frequency lattice.
struct SpectralField {
    TorusGrid grid;
    std::vector<cdouble> coeffs;

    SpectralField(TorusGrid g, cdouble fill = cdouble(0.0, 0.0))
        : grid(g), coeffs(g.size(), fill) {}
    SpectralField(TorusGrid g, std::vector<cdouble> c);
};

// Forward transform carries the 1/n^d normalization, so a constant field 1
// has coefficient 1 at xi = 0 and idft(dft(F)) = F.
SpectralField dft(const Field& field);
Field idft(const SpectralField& coeffs);

/// Discrete L2 norm sqrt(h^d sum |F|^2), the Riemann sum of the continuum
/// L2 norm. Equals sobolev_norm(field, 0).
double l2_norm(const Field& field);
double max_abs(const Field& field);
double max_imag(const Field& field);

/// Relative L2 difference ||a-b|| / ||b|| (0 if both vanish).
double rel_l2_error(const Field& a, const Field& b);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(cdouble scale, const Field& a);

/// Drops any imaginary round-off; values become Re(values).
Field real_part(const Field& a);
Field imag_part(const Field& a);

enum class ZeroModeRule { zero, reject };

/// (-Delta)^order: multiplies each coefficient by |xi|^(2 order).
/// For negative order the xi = 0 coefficient must vanish; `rule` decides
/// whether a nonzero zero mode is zeroed or rejected.
Field fractional_power(const Field& field, double order,
                       ZeroModeRule rule = ZeroModeRule::reject);
SpectralField fractional_power(const SpectralField& coeffs, double order,
                               ZeroModeRule rule = ZeroModeRule::reject);

/// Sobolev norm sqrt(L^d sum <xi>^(2s) |c_k|^2), <xi> = (1+|xi|^2)^(1/2).
double sobolev_norm(const Field& field, double s);
double sobolev_norm(const SpectralField& coeffs, double s);

/// Spectral derivative along `axis` (multiplication by i xi_axis).
SpectralField spectral_derivative(const SpectralField& coeffs, int axis);

} // namespace fracwave
