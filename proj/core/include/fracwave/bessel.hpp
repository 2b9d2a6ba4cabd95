#pragma once

#include "fracwave/field.hpp"
#include "fracwave/solution.hpp"
#include "fracwave/types.hpp"

#include <optional>
#include <vector>

namespace fracwave {

/// Bessel order nu restricted to (-1, 1); the solver only ever needs
/// J_(+-sigma) and J_(+-(1-sigma)).
struct BesselOrder {
    double nu;
    explicit BesselOrder(double nu_);
};

/// J_nu(r) from the ascending series for r below the series/asymptotics
/// crossover and the Hankel large-argument expansion beyond. r = 0 needs
/// nu >= 0; the series accumulates in long double to absorb cancellation.
double bessel_j(BesselOrder order, double r);

/// Crossover radius, determined once by scanning for where series and
/// asymptotics agree; falls back to 12 if the scan is inconclusive.
double bessel_r_switch();

/// How the Neumann channel treats the |xi|^(-2 sigma) factor at xi = 0
/// when m = 0: reject nonzero zero-mode data (the band-pass mandate),
/// silently zero it, or use the analytic limit t^(2 sigma) of the combined
/// multiplier (valid because r^sigma J_sigma(r) lambda^(-sigma) extends
/// analytically through lambda = 0).
enum class NeumannZeroMode { reject, zero, analytic_limit };

/// Per-frequency Dirichlet/Neumann multipliers at fixed (sigma, t, m):
///   D = Gamma(1-sigma) 2^-sigma r^sigma J_(-sigma)(r),
///   N = sigma 2^sigma Gamma(sigma) r^sigma J_sigma(r) lambda^-sigma,
/// with r = t sqrt(lambda), lambda = |xi|^2 + m^2. Real and even in xi.
struct MultiplierPlan {
    TorusGrid grid;
    double sigma;
    double t;
    double mass;
    NeumannZeroMode zero_mode;
    std::vector<double> dirichlet;
    std::vector<double> neumann;
};

MultiplierPlan build_multiplier_plan(const TorusGrid& grid,
                                     const FractionalOrder& sigma, double t,
                                     double m,
                                     NeumannZeroMode zero_mode =
                                         NeumannZeroMode::reject);

/// Spectral solve u-hat = D f-hat + N g-hat; either datum may be absent.
SolutionSnapshot solve_bessel(const std::optional<Field>& f,
                              const std::optional<Field>& g,
                              const FractionalOrder& sigma, double t,
                              double m = 0.0,
                              NeumannZeroMode zero_mode =
                                  NeumannZeroMode::reject);

/// ||u(t)||_{2,s} divided by the fixed-time estimate right-hand side for
/// the sigma branch (<= 1/2 or >= 1/2). Returns 0 when both data vanish.
double fixedtime_ratio(const std::optional<Field>& f,
                       const std::optional<Field>& g,
                       const FractionalOrder& sigma, double t, double s,
                       NeumannZeroMode zero_mode = NeumannZeroMode::reject);

} // namespace fracwave
