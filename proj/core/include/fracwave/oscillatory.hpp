#pragma once

#include "fracwave/quadrature.hpp"
#include "fracwave/types.hpp"

#include <string>
#include <vector>

namespace fracwave::osc {

/// Contour pieces the deformed quadrature can traverse.
enum class PathPiece { inner_ray, inner_arc, real_panel, outer_arc, outer_ray };

std::string path_piece_name(PathPiece p);

/// Contour-quadrature controls.
///
/// theta_ray in (pi/2, pi) is the rotated-ray direction in the coordinates
/// of the deformation argument; the engine works at elevation
/// theta0 = theta_ray - pi/2 above (below) the positive real s-axis near
/// s = 0 (s = infinity). The stationary-point window on the real axis has
/// half-width window_factor * sqrt(A) (clamped to A/2), A = t sqrt(lambda)/2.
struct QuadratureSpec {
    int nodes_per_panel = 16;
    int initial_panels = 8;
    double theta_ray = M_PI / 2.0 + M_PI / 3.0;
    double r_tail = 50.0;
    double window_factor = 2.0;
    double abs_tol = 1e-12;
    int max_doublings = 9;

    void validate() const;
    double theta0() const { return theta_ray - M_PI / 2.0; }
};

struct OscillatoryValue {
    cdouble value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    std::vector<PathPiece> path;
};

/// Right-hand side of the oscillatory Gamma identity
/// Gamma(sigma) = i^sigma lim_R int_0^R e^{-is} s^(sigma-1) ds,
/// evaluated on the deformed contour. Matches a reference Gamma.
cdouble gamma_oscillatory(const FractionalOrder& sigma,
                          const QuadratureSpec& spec = {});

/// Symbol I_sigma(lambda, t) =
///   (i^sigma / Gamma(sigma)) int_0^inf e^{-is} e^{-i t^2 lambda/(4s)}
///   s^(sigma-1) ds,
/// the diagonal action of the solution operator on the spectrum.
/// I_sigma(0, t) = 1; I_(1/2)(lambda, t) = e^{-i t sqrt(lambda)}.
OscillatoryValue symbol_I(const FractionalOrder& sigma, double lambda, double t,
                          const QuadratureSpec& spec = {});

/// Closed form of the weighted Neumann derivative of the symbol:
/// d_t^sigma I_sigma(lambda, t)
///   = -i^(2 sigma) (Gamma(1-sigma)/(sigma 4^sigma Gamma(sigma)))
///     lambda^sigma I_(1-sigma)(lambda, t).
cdouble symbol_dtn(const FractionalOrder& sigma, double lambda, double t,
                   const QuadratureSpec& spec = {});

/// Truncated integral int_eps^R e^{-is} e^{-i t^2 lambda/(4s)} s^(sigma-k) ds
/// for k in {1,2,3} (bound verification; diverges as eps -> 0 for k = 3).
cdouble truncated_integral(const FractionalOrder& sigma, double lambda,
                           double t, double eps, double R, int k,
                           const QuadratureSpec& spec = {});

/// |FD2[I](t) + ((1-2 sigma)/t) FD1[I](t) + lambda I(lambda,t)| with central
/// differences of step h; the symbol solves the lambda-projected equation,
/// so this decays like h^2.
double ode_residual_I(const FractionalOrder& sigma, double lambda, double t,
                      double h, const QuadratureSpec& spec = {});

/// K_sigma(i r) = (r^sigma / 2^(1+sigma))
///   int_0^inf e^{-i r^2/(4s)} e^{-is} s^(-1-sigma) ds, r > 0,
/// by the same contour deformation as symbol_I.
OscillatoryValue modified_bessel_K_imag(const FractionalOrder& sigma, double r,
                                        const QuadratureSpec& spec = {});

/// Shared engine: int_0^inf e^{-i(s + A^2/s)} s^(p-1) ds on the deformed
/// contour. A > 0 admits any p (the inner phase factor supplies decay);
/// A = 0 requires p > 0.
OscillatoryValue oscillatory_power_integral(double p, double A,
                                            const QuadratureSpec& spec = {});

} // namespace fracwave::osc
