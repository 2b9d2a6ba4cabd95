#pragma once

#include "fracwave/testdata.hpp"
#include "fracwave/types.hpp"

#include <array>

namespace fracwave::kernels {

enum class KernelRegime { low, high, limit };

/// Ball-kernel parameters: gamma = d/2 - sigma must lie in (0, 2) (or be
/// exactly 1, the limiting spherical-mean case). The leading constants:
///   low  (0 < gamma < 1):
///     sigma sin(gamma pi) Gamma(gamma) / (pi^(d/2) sin(sigma pi) Gamma(1-sigma))
///   high (1 < gamma < 2):
///     sigma sin((gamma-1) pi) Gamma(gamma-1)
///       / (2 pi^(d/2) sin(sigma pi) Gamma(1-sigma))
struct KernelSpec {
    int dim;
    double sigma;
    double gamma;
    KernelRegime regime;
    double constant;

    static KernelSpec make(int dim, const FractionalOrder& sigma);
};

struct PointQuery {
    std::array<double, 5> x{};
    double t = 1.0;
};

/// Node counts for the product rules: Gauss-Jacobi in the radius (the
/// boundary weight is absorbed exactly) times sphere rules per dimension.
struct KernelQuadrature {
    int radial_nodes = 48;
    int polar_nodes = 24;      // per polar angle (Gauss in cosine)
    int azimuthal_nodes = 48;  // trapezoid on the final circle
};

/// Neumann solution u(x,t) = c int_{B(x,t)} g(y) (t^2-|x-y|^2)^(-gamma) dy,
/// 0 < gamma < 1, d in {1,2,3}. Exactly zero when g vanishes on B(x,t).
double kernel_low_solve(const ScalarFunction& g, const PointQuery& q,
                        const KernelSpec& spec,
                        const KernelQuadrature& quadr = {});

/// u(x,t) = (c/t^2) int_{B(x,t)} [2(sigma+1) g + (y-x).grad g]
///          (t^2-|x-y|^2)^(1-gamma) dy, 1 < gamma < 2, d in {3,4,5}.
double kernel_high_solve(const ScalarFunction& g, const PointQuery& q,
                         const KernelSpec& spec,
                         const KernelQuadrature& quadr = {});

/// Limiting solution (1/(c_d t)) int_{boundary B(x,t)} g dS with
/// c_2 = 2 pi, c_3 = 4 pi, c_4 = 2 pi^2.
double spherical_mean_solve(const ScalarFunction& g, const PointQuery& q,
                            int dim, const KernelQuadrature& quadr = {});

/// One-dimensional method-of-descent solution for sigma in [1/2, 1):
/// u(x,t) = (sigma Gamma(sigma) / (sqrt(pi) Gamma(sigma+1/2)))
///          int_{x-t}^{x+t} g(y) (t^2-|x-y|^2)^(sigma-1/2) dy.
/// At sigma = 1/2 exactly this is the common limit (1/2) int_{x-t}^{x+t} g
/// of the two one-dimensional formulas (a limit evaluation; d = 1 at
/// sigma = 1/2 belongs to neither kernel regime).
double descent1d_solve(const ScalarFunction& g, const PointQuery& q,
                       const FractionalOrder& sigma,
                       const KernelQuadrature& quadr = {});

/// Classical planar wave solution with Neumann data g:
/// u(x,t) = (t^2/2) avg_{B(x,t)} g(y) (t^2-|x-y|^2)^(-1/2) dy.
/// Coincides with kernel_low_solve at d = 2, sigma = 1/2.
double classical_d2_solve(const ScalarFunction& g, const PointQuery& q,
                          const KernelQuadrature& quadr = {});

/// Raw potentials Im V_gamma (no solution constants): the low form is
/// -sin(gamma pi) 4^gamma Gamma(gamma) int_B g (t^2-|x-y|^2)^(-gamma) dy
/// for gamma in (0,1); the high form applies the derivative recursion
/// d_t V_gamma = (t/2) V_(gamma+1) once. Used to verify that recursion.
double im_potential_low(double gamma, const ScalarFunction& g,
                        const PointQuery& q, int dim,
                        const KernelQuadrature& quadr = {});
double im_potential_high(double gamma, const ScalarFunction& g,
                         const PointQuery& q, int dim,
                         const KernelQuadrature& quadr = {});

} // namespace fracwave::kernels
