#pragma once

#include "fracwave/bessel.hpp"
#include "fracwave/field.hpp"
#include "fracwave/oscillatory.hpp"
#include "fracwave/solution.hpp"

#include <functional>
#include <vector>

namespace fracwave {

/// Applies the oscillatory-subordination solution operator U_t^sigma:
/// u-hat(xi, t) = I_sigma(|xi|^2 + m^2, t) f-hat(xi), with the symbol
/// evaluated by contour quadrature once per distinct lambda.
SolutionSnapshot apply_U(const Field& f, const FractionalOrder& sigma,
                         double t, double m = 0.0,
                         const osc::QuadratureSpec& spec = {});

/// u(., t) = (1 / sin(sigma pi)) Re(i^{1 - 2 sigma} U_t^sigma f):
/// real solution with u(., 0) = f and vanishing weighted Neumann derivative.
SolutionSnapshot solve_dirichlet_real(const Field& f,
                                      const FractionalOrder& sigma, double t,
                                      double m = 0.0,
                                      const osc::QuadratureSpec& spec = {});

/// u(., t) = -(sigma 4^sigma Gamma(sigma) / (sin(sigma pi) Gamma(1-sigma)))
///           Im(U_t^sigma ((-Delta + m^2)^{-sigma} g)):
/// real solution with u(., 0) = 0 and weighted Neumann derivative g.
SolutionSnapshot solve_neumann_real(const Field& g,
                                    const FractionalOrder& sigma, double t,
                                    double m = 0.0,
                                    NeumannZeroMode zero_mode =
                                        NeumannZeroMode::reject,
                                    const osc::QuadratureSpec& spec = {});

/// Weighted Neumann derivative (1/(2 sigma)) t^{1-2 sigma} d_t of U_t^sigma f
/// by central differences with step t/10, Richardson-extrapolated to t = 0
/// along the decreasing t_sequence (needs >= 2 entries; the extrapolation
/// ladder uses the exponents 2(1-sigma) and 2 of the symbol's small-t
/// expansion). Dividing the result by dtn_constant() recovers
/// (-Delta + m^2)^sigma f.
Field dtn_extract(const Field& f, const FractionalOrder& sigma,
                  const std::vector<double>& t_sequence, double m = 0.0,
                  const osc::QuadratureSpec& spec = {});

/// Discrete residual ||(d_t^2 + ((1-2 sigma)/t) d_t) u + (-Delta + m^2) u|| /
/// ||u|| of a time-indexed solver, with central differences of step h and
/// the spectral operator. `solve` maps t to the solution field.
double pde_residual(const std::function<Field(double)>& solve,
                    const FractionalOrder& sigma, double t, double h, double m);

} // namespace fracwave
