#include "fracwave/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace {

void check_size(const TorusGrid& grid, std::size_t have, const char* what) {
    if (have != grid.size())
        throw std::invalid_argument(std::string(what) +
                                    ": value count does not match grid");
}

// In-place radix-2 Cooley-Tukey on a stride-1 line. sign = -1 forward.
void fft_line(cdouble* data, int n, int sign) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * M_PI / len;
        cdouble wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                cdouble u = data[i + k];
                cdouble v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Transform along every axis of the d-dimensional array.
void fft_nd(std::vector<cdouble>& a, const TorusGrid& g, int sign) {
    const int n = g.n;
    std::vector<cdouble> line(n);
    // axis strides for row-major layout with the last axis contiguous
    std::size_t stride = 1;
    std::vector<std::size_t> strides(g.dim);
    for (int ax = g.dim - 1; ax >= 0; --ax) {
        strides[ax] = stride;
        stride *= static_cast<std::size_t>(n);
    }
    const std::size_t total = g.size();
    for (int ax = 0; ax < g.dim; ++ax) {
        const std::size_t s = strides[ax];
        const std::size_t lines = total / n;
        for (std::size_t l = 0; l < lines; ++l) {
            // Base index of the l-th line along this axis.
            std::size_t block = l / s;
            std::size_t within = l % s;
            std::size_t base = block * s * n + within;
            for (int k = 0; k < n; ++k) line[k] = a[base + k * s];
            fft_line(line.data(), n, sign);
            for (int k = 0; k < n; ++k) a[base + k * s] = line[k];
        }
    }
}

} // namespace

Field::Field(TorusGrid g, std::vector<cdouble> v) : grid(g), values(std::move(v)) {
    check_size(grid, values.size(), "Field");
}

SpectralField::SpectralField(TorusGrid g, std::vector<cdouble> c)
    : grid(g), coeffs(std::move(c)) {
    check_size(grid, coeffs.size(), "SpectralField");
}

SpectralField dft(const Field& field) {
    check_size(field.grid, field.values.size(), "dft");
    SpectralField out(field.grid);
    out.coeffs = field.values;
    fft_nd(out.coeffs, field.grid, -1);
    const double scale = 1.0 / static_cast<double>(field.grid.size());
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

Field idft(const SpectralField& coeffs) {
    check_size(coeffs.grid, coeffs.coeffs.size(), "idft");
    Field out(coeffs.grid);
    out.values = coeffs.coeffs;
    fft_nd(out.values, coeffs.grid, +1);
    return out;
}

double l2_norm(const Field& field) {
    double acc = 0.0;
    for (const auto& v : field.values) acc += std::norm(v);
    double hd = std::pow(field.grid.spacing(), field.grid.dim);
    return std::sqrt(hd * acc);
}

double max_abs(const Field& field) {
    double m = 0.0;
    for (const auto& v : field.values) m = std::max(m, std::abs(v));
    return m;
}

double max_imag(const Field& field) {
    double m = 0.0;
    for (const auto& v : field.values) m = std::max(m, std::abs(v.imag()));
    return m;
}

double rel_l2_error(const Field& a, const Field& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("rel_l2_error: grids differ");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : std::sqrt(num);
    return std::sqrt(num / den);
}

Field operator+(const Field& a, const Field& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("Field +: grids differ");
    Field out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

Field operator-(const Field& a, const Field& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("Field -: grids differ");
    Field out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

Field operator*(cdouble scale, const Field& a) {
    Field out = a;
    for (auto& v : out.values) v *= scale;
    return out;
}

Field real_part(const Field& a) {
    Field out = a;
    for (auto& v : out.values) v = cdouble(v.real(), 0.0);
    return out;
}

Field imag_part(const Field& a) {
    Field out = a;
    for (auto& v : out.values) v = cdouble(v.imag(), 0.0);
    return out;
}

SpectralField fractional_power(const SpectralField& coeffs, double order,
                               ZeroModeRule rule) {
    SpectralField out = coeffs;
    const TorusGrid& g = coeffs.grid;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        double lam = g.freq_norm2(i);
        if (lam == 0.0) {
            if (order > 0.0) {
                out.coeffs[i] = 0.0;
            } else if (order < 0.0) {
                double scale = std::abs(out.coeffs[i]);
                double ref = 0.0;
                for (const auto& c : coeffs.coeffs) ref = std::max(ref, std::abs(c));
                if (rule == ZeroModeRule::reject && scale > 1e-13 * ref)
                    throw std::invalid_argument(
                        "fractional_power: negative order requires zero mean "
                        "(band-passed data); zero mode is nonzero");
                out.coeffs[i] = 0.0;
            }
            continue;
        }
        out.coeffs[i] *= std::pow(lam, order);
    }
    return out;
}

Field fractional_power(const Field& field, double order, ZeroModeRule rule) {
    return idft(fractional_power(dft(field), order, rule));
}

double sobolev_norm(const SpectralField& coeffs, double s) {
    const TorusGrid& g = coeffs.grid;
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.coeffs.size(); ++i) {
        double w = std::pow(1.0 + g.freq_norm2(i), s);
        acc += w * std::norm(coeffs.coeffs[i]);
    }
    double vol = std::pow(g.box_length, g.dim);
    return std::sqrt(vol * acc);
}

double sobolev_norm(const Field& field, double s) {
    return sobolev_norm(dft(field), s);
}

SpectralField spectral_derivative(const SpectralField& coeffs, int axis) {
    if (axis < 0 || axis >= coeffs.grid.dim)
        throw std::invalid_argument("spectral_derivative: axis out of range");
    SpectralField out = coeffs;
    const TorusGrid& g = coeffs.grid;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        auto idx = g.unflatten(i);
        out.coeffs[i] *= cdouble(0.0, g.frequency(idx[axis]));
    }
    return out;
}

} // namespace fracwave
