#pragma once

#include "fracwave/types.hpp"

#include <functional>
#include <vector>

namespace fracwave::quad {

/// Nodes and weights of an n-point rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Cached per n; thread safe.
const Rule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1],
/// alpha, beta > -1, computed by Golub-Welsch. Not cached (parameters vary).
Rule gauss_jacobi(int n, double alpha, double beta);

/// Integral of w(x) f(x) over [a, b] where w absorbs the Jacobi weight
/// mapped from [-1,1]; `rule` must come from gauss_jacobi/gauss_legendre.
/// f receives the mapped abscissa in [a, b].
template <typename F>
auto mapped_sum(const Rule& rule, double a, double b, F&& f)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    R acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc;
}

/// Complex-valued integrand of a real parameter (a path parametrization
/// with the Jacobian already folded in).
using ParamIntegrand = std::function<cdouble(double)>;

struct PanelResult {
    cdouble value{0.0, 0.0};
    double abs_error{0.0};  // |last refinement change|, or L1 floor
    bool converged{true};
    long evaluations{0};
};

/// Integrates f over [a, b] with `panels` uniform panels of an n-point
/// Gauss-Legendre rule, doubling the panel count until two successive
/// refinements agree to abs_tol (or the floating-point floor of the
/// panel L1 mass is reached). The reported abs_error is the last change.
PanelResult integrate_refining(const ParamIntegrand& f, double a, double b,
                               int panels, int nodes_per_panel,
                               double abs_tol, int max_doublings = 9);

} // namespace fracwave::quad
