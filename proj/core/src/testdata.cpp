#include "fracwave/testdata.hpp"

#include "fracwave/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace {

// C-infinity step: 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

// Smooth annulus cutoff in |xi| with transition width tau on both edges,
// identically 0 outside [r_lo, r_hi] and 1 on the middle plateau.
double annulus_cutoff(double rho, double r_lo, double r_hi) {
    double tau = 0.25 * (r_hi - r_lo);
    return smooth_step((rho - r_lo) / tau) * smooth_step((r_hi - rho) / tau);
}

double min_image(double delta, double box) {
    delta = std::fmod(delta, box);
    if (delta > 0.5 * box) delta -= box;
    if (delta < -0.5 * box) delta += box;
    return delta;
}

} // namespace

GaussianSum::GaussianSum(int dim, std::vector<Bump> bumps)
    : dim_(dim), bumps_(std::move(bumps)) {
    if (dim < 1 || dim > 5)
        throw std::invalid_argument("GaussianSum: dim must be in [1,5]");
    for (const auto& b : bumps_)
        if (!(b.width > 0.0))
            throw std::invalid_argument("GaussianSum: width must be positive");
}

double GaussianSum::value(std::span<const double> x) const {
    double acc = 0.0;
    for (const auto& b : bumps_) {
        double r2 = 0.0;
        for (int a = 0; a < dim_; ++a) {
            double d = x[a] - b.center[a];
            r2 += d * d;
        }
        acc += b.amplitude * std::exp(-r2 / (2.0 * b.width * b.width));
    }
    return acc;
}

std::array<double, 5> GaussianSum::gradient(std::span<const double> x) const {
    std::array<double, 5> g{};
    for (const auto& b : bumps_) {
        double r2 = 0.0;
        for (int a = 0; a < dim_; ++a) {
            double d = x[a] - b.center[a];
            r2 += d * d;
        }
        double w2 = b.width * b.width;
        double e = b.amplitude * std::exp(-r2 / (2.0 * w2));
        for (int a = 0; a < dim_; ++a)
            g[a] += -e * (x[a] - b.center[a]) / w2;
    }
    return g;
}

TrigPolynomial::TrigPolynomial(int dim, std::vector<Mode> modes)
    : dim_(dim), modes_(std::move(modes)) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("TrigPolynomial: dim must be in [1,3]");
}

double TrigPolynomial::value(std::span<const double> x) const {
    double acc = 0.0;
    for (const auto& m : modes_) {
        double ph = m.phase;
        for (int a = 0; a < dim_; ++a) ph += m.wavevector[a] * x[a];
        acc += m.amplitude * std::cos(ph);
    }
    return acc;
}

std::array<double, 5> TrigPolynomial::gradient(std::span<const double> x) const {
    std::array<double, 5> g{};
    for (const auto& m : modes_) {
        double ph = m.phase;
        for (int a = 0; a < dim_; ++a) ph += m.wavevector[a] * x[a];
        double s = -m.amplitude * std::sin(ph);
        for (int a = 0; a < dim_; ++a) g[a] += s * m.wavevector[a];
    }
    return g;
}

Field TrigPolynomial::sample(const TorusGrid& grid) const {
    if (grid.dim != dim_)
        throw std::invalid_argument("TrigPolynomial::sample: dimension mismatch");
    Field out(grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        auto idx = grid.unflatten(i);
        double x[3] = {grid.coordinate(idx[0]), grid.coordinate(idx[1]),
                       grid.coordinate(idx[2])};
        out.values[i] = value(std::span<const double>(x, grid.dim));
    }
    return out;
}

TrigPolynomial random_trig_polynomial(const TorusGrid& grid, double band_lo,
                                      double band_hi, int count,
                                      std::uint64_t seed) {
    if (!(0.0 < band_lo && band_lo < band_hi &&
          band_hi < grid.nyquist_radius()))
        throw std::invalid_argument(
            "random_trig_polynomial: need 0 < band_lo < band_hi < Nyquist");
    Rng rng(seed);
    std::vector<TrigPolynomial::Mode> modes;
    const double base = 2.0 * M_PI / grid.box_length;
    int guard = 0;
    while (static_cast<int>(modes.size()) < count && ++guard < 100000) {
        TrigPolynomial::Mode m;
        double rho2 = 0.0;
        for (int a = 0; a < grid.dim; ++a) {
            int kmax = static_cast<int>(std::floor(band_hi / base));
            int k = static_cast<int>(
                std::floor(rng.uniform(-double(kmax), double(kmax) + 1.0)));
            m.wavevector[a] = base * k;
            rho2 += m.wavevector[a] * m.wavevector[a];
        }
        double rho = std::sqrt(rho2);
        if (rho < band_lo || rho > band_hi) continue;
        m.amplitude = rng.uniform(0.2, 1.0);
        m.phase = rng.uniform(0.0, 2.0 * M_PI);
        modes.push_back(m);
    }
    if (static_cast<int>(modes.size()) < count)
        throw std::invalid_argument(
            "random_trig_polynomial: band contains too few lattice modes");
    return TrigPolynomial(grid.dim, std::move(modes));
}

SpectralInterpolant::SpectralInterpolant(const Field& field)
    : coeffs_(dft(field)) {}

double SpectralInterpolant::value(std::span<const double> x) const {
    const TorusGrid& g = coeffs_.grid;
    cdouble acc(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.coeffs.size(); ++i) {
        if (coeffs_.coeffs[i] == cdouble(0.0, 0.0)) continue;
        auto idx = g.unflatten(i);
        double ph = 0.0;
        for (int a = 0; a < g.dim; ++a) ph += g.frequency(idx[a]) * x[a];
        acc += coeffs_.coeffs[i] * cdouble(std::cos(ph), std::sin(ph));
    }
    return acc.real();
}

std::array<double, 5> SpectralInterpolant::gradient(
    std::span<const double> x) const {
    const TorusGrid& g = coeffs_.grid;
    std::array<double, 5> out{};
    for (std::size_t i = 0; i < coeffs_.coeffs.size(); ++i) {
        if (coeffs_.coeffs[i] == cdouble(0.0, 0.0)) continue;
        auto idx = g.unflatten(i);
        double ph = 0.0;
        double xi[3];
        for (int a = 0; a < g.dim; ++a) {
            xi[a] = g.frequency(idx[a]);
            ph += xi[a] * x[a];
        }
        cdouble e = coeffs_.coeffs[i] * cdouble(std::cos(ph), std::sin(ph));
        for (int a = 0; a < g.dim; ++a)
            out[a] += (cdouble(0.0, xi[a]) * e).real();
    }
    return out;
}

TestData make_test_data(const TorusGrid& grid,
                        std::span<const GaussianSum::Bump> bumps,
                        const std::optional<BandSpec>& band) {
    if (band) {
        if (!(band->r_lo >= 0.0 && band->r_lo < band->r_hi &&
              band->r_hi <= grid.nyquist_radius()))
            throw std::invalid_argument(
                "make_test_data: band must satisfy 0 <= r_lo < r_hi <= Nyquist");
    }

    Field raw(grid);
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        auto idx = grid.unflatten(i);
        double acc = 0.0;
        for (const auto& b : bumps) {
            double r2 = 0.0;
            for (int a = 0; a < grid.dim; ++a) {
                double d = min_image(grid.coordinate(idx[a]) - b.center[a],
                                     grid.box_length);
                r2 += d * d;
            }
            acc += b.amplitude * std::exp(-r2 / (2.0 * b.width * b.width));
        }
        raw.values[i] = acc;
    }

    SpectralField coeffs = dft(raw);
    if (band) {
        for (std::size_t i = 0; i < coeffs.coeffs.size(); ++i) {
            double rho = std::sqrt(grid.freq_norm2(i));
            coeffs.coeffs[i] *= annulus_cutoff(rho, band->r_lo, band->r_hi);
        }
    }

    TestData out{real_part(idft(coeffs)), {}};
    for (int a = 0; a < grid.dim; ++a)
        out.gradient.push_back(real_part(idft(spectral_derivative(coeffs, a))));
    return out;
}

TestData default_band_passed_bump(const TorusGrid& grid) {
    GaussianSum::Bump bump;
    for (int a = 0; a < grid.dim; ++a) bump.center[a] = 0.5 * grid.box_length;
    bump.width = grid.box_length / 10.0;
    bump.amplitude = 1.0;
    const double nyq = grid.nyquist_radius();
    BandSpec band{0.15 * nyq, 0.6 * nyq};
    return make_test_data(grid, std::span<const GaussianSum::Bump>(&bump, 1),
                          band);
}

} // namespace fracwave
