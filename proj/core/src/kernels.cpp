#include "fracwave/kernels.hpp"

#include "fracwave/quadrature.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace fracwave::kernels {

namespace {

// Integral of g over the sphere of radius rho about x (surface measure,
// not the average), by product rules exact for smooth integrands:
//   d=1: two-point sum; d=2: trapezoid; d>=3: Gauss rules in the cosines
//   of the polar angles (Jacobi weights (1-u^2)^((d-3)/2), ...) times a
//   trapezoid on the final circle.
class SphereRule {
public:
    SphereRule(int dim, const KernelQuadrature& quadr) : dim_(dim) {
        using quad::gauss_jacobi;
        switch (dim) {
            case 1:
                break;
            case 2:
                azim_ = quadr.azimuthal_nodes;
                break;
            case 3:
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 0.0, 0.0));
                azim_ = quadr.azimuthal_nodes;
                break;
            case 4:
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 0.5, 0.5));
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 0.0, 0.0));
                azim_ = quadr.azimuthal_nodes;
                break;
            case 5:
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 1.0, 1.0));
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 0.5, 0.5));
                polar_.push_back(gauss_jacobi(quadr.polar_nodes, 0.0, 0.0));
                azim_ = quadr.azimuthal_nodes;
                break;
            default:
                throw std::invalid_argument("SphereRule: dim must be in [1,5]");
        }
    }

    double integrate(const std::function<double(const double*)>& f,
                     const std::array<double, 5>& x, double rho) const {
        double y[5];
        if (dim_ == 1) {
            y[0] = x[0] + rho;
            double acc = f(y);
            y[0] = x[0] - rho;
            acc += f(y);
            return acc;
        }
        return recurse(f, x, rho, 0, y, 1.0);
    }

private:
    // Spherical coordinates omega = (cos a_1, sin a_1 cos a_2, ...); each
    // polar level integrates du against its Jacobi weight, the last level
    // runs the unit circle.
    double recurse(const std::function<double(const double*)>& f,
                   const std::array<double, 5>& x, double rho, int level,
                   double* y, double sin_prod) const {
        if (level == static_cast<int>(polar_.size())) {
            // Final circle: components level and level+1.
            double acc = 0.0;
            for (int k = 0; k < azim_; ++k) {
                double phi = 2.0 * M_PI * k / azim_;
                y[level] = x[level] + rho * sin_prod * std::cos(phi);
                y[level + 1] = x[level + 1] + rho * sin_prod * std::sin(phi);
                acc += f(y);
            }
            return acc * (2.0 * M_PI / azim_);
        }
        const quad::Rule& rule = polar_[level];
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double u = rule.nodes[i];  // cos of this polar angle
            y[level] = x[level] + rho * sin_prod * u;
            double s = std::sqrt(std::max(0.0, 1.0 - u * u));
            acc += rule.weights[i] *
                   recurse(f, x, rho, level + 1, y, sin_prod * s);
        }
        return acc;
    }

    int dim_;
    std::vector<quad::Rule> polar_;
    int azim_ = 0;
};

// Radial integral int_0^t rho^(d-1) (t^2-rho^2)^(-beta) Phi(rho) drho via
// rho = t sqrt(1-w):
//   (t^(d-2 beta)/2) int_0^1 w^(-beta) (1-w)^(d/2-1) Phi(t sqrt(1-w)) dw,
// with both endpoint powers absorbed by a Gauss-Jacobi rule on [-1,1]
// (alpha = d/2-1 at w=1 i.e. the ball center, beta' = -beta at the
// boundary). beta < 1 required.
double radial_ball_integral(int dim, double beta, double t, int nodes,
                            const std::function<double(double)>& phi) {
    const double alpha = 0.5 * dim - 1.0;
    quad::Rule rule = quad::gauss_jacobi(nodes, alpha, -beta);
    // Map [-1,1] -> w in [0,1]: w = (1+u)/2; weight (1-u)^alpha (1+u)^(-beta)
    // carries (1-w)^alpha w^(-beta) 2^(alpha - beta) and dw = du/2.
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double w = 0.5 * (1.0 + rule.nodes[i]);
        double rho = t * std::sqrt(1.0 - w);
        acc += rule.weights[i] * phi(rho);
    }
    double scale = std::pow(t, dim - 2.0 * beta) * 0.5 *
                   std::pow(2.0, -(alpha - beta + 1.0));
    return scale * acc;
}

double ball_integral(const ScalarFunction& g, const PointQuery& q, int dim,
                     double beta, const KernelQuadrature& quadr) {
    SphereRule sphere(dim, quadr);
    auto fn = [&](const double* y) {
        return g.value(std::span<const double>(y, dim));
    };
    auto phi = [&](double rho) { return sphere.integrate(fn, q.x, rho); };
    return radial_ball_integral(dim, beta, q.t, quadr.radial_nodes, phi);
}

// int_B [2(sigma+1) g + (y-x).grad g] (t^2-|x-y|^2)^(-beta) dy with the
// numerator assembled from the closure's gradient.
double ball_integral_graded(const ScalarFunction& g, const PointQuery& q,
                            int dim, double beta, double coeff_g,
                            const KernelQuadrature& quadr) {
    SphereRule sphere(dim, quadr);
    auto fn = [&](const double* y) {
        std::span<const double> yy(y, dim);
        double val = coeff_g * g.value(yy);
        auto grad = g.gradient(yy);
        for (int a = 0; a < dim; ++a) val += (y[a] - q.x[a]) * grad[a];
        return val;
    };
    auto phi = [&](double rho) { return sphere.integrate(fn, q.x, rho); };
    return radial_ball_integral(dim, beta, q.t, quadr.radial_nodes, phi);
}

void check_query(const PointQuery& q) {
    if (!(q.t > 0.0))
        throw std::invalid_argument("kernel query: t must be positive");
}

} // namespace

KernelSpec KernelSpec::make(int dim, const FractionalOrder& sigma) {
    if (dim < 1 || dim > 5)
        throw std::invalid_argument("KernelSpec: dim must be in [1,5]");
    const double s = sigma.sigma();
    const double gamma = 0.5 * dim - s;
    KernelSpec spec{dim, s, gamma, KernelRegime::limit, 0.0};
    if (gamma == 1.0) {
        spec.regime = KernelRegime::limit;
        return spec;
    }
    if (gamma > 0.0 && gamma < 1.0) {
        spec.regime = KernelRegime::low;
        spec.constant = s * std::sin(gamma * M_PI) * std::tgamma(gamma) /
                        (std::pow(M_PI, 0.5 * dim) * std::sin(s * M_PI) *
                         std::tgamma(1.0 - s));
        return spec;
    }
    if (gamma > 1.0 && gamma < 2.0) {
        spec.regime = KernelRegime::high;
        spec.constant = s * std::sin((gamma - 1.0) * M_PI) *
                        std::tgamma(gamma - 1.0) /
                        (2.0 * std::pow(M_PI, 0.5 * dim) *
                         std::sin(s * M_PI) * std::tgamma(1.0 - s));
        return spec;
    }
    throw std::invalid_argument(
        "KernelSpec: gamma = d/2 - sigma must lie in (0, 2)");
}

double kernel_low_solve(const ScalarFunction& g, const PointQuery& q,
                        const KernelSpec& spec, const KernelQuadrature& quadr) {
    check_query(q);
    if (spec.regime != KernelRegime::low)
        throw std::invalid_argument("kernel_low_solve: spec regime is not low");
    if (g.dim() != spec.dim)
        throw std::invalid_argument("kernel_low_solve: dimension mismatch");
    return spec.constant * ball_integral(g, q, spec.dim, spec.gamma, quadr);
}

double kernel_high_solve(const ScalarFunction& g, const PointQuery& q,
                         const KernelSpec& spec,
                         const KernelQuadrature& quadr) {
    check_query(q);
    if (spec.regime != KernelRegime::high)
        throw std::invalid_argument("kernel_high_solve: spec regime is not high");
    if (g.dim() != spec.dim)
        throw std::invalid_argument("kernel_high_solve: dimension mismatch");
    double integral =
        ball_integral_graded(g, q, spec.dim, spec.gamma - 1.0,
                             2.0 * (spec.sigma + 1.0), quadr);
    return spec.constant / (q.t * q.t) * integral;
}

double spherical_mean_solve(const ScalarFunction& g, const PointQuery& q,
                            int dim, const KernelQuadrature& quadr) {
    check_query(q);
    double c_d;
    switch (dim) {
        case 2: c_d = 2.0 * M_PI; break;
        case 3: c_d = 4.0 * M_PI; break;
        case 4: c_d = 2.0 * M_PI * M_PI; break;
        default:
            throw std::invalid_argument(
                "spherical_mean_solve: dim must be 2, 3 or 4");
    }
    SphereRule sphere(dim, quadr);
    auto fn = [&](const double* y) {
        return g.value(std::span<const double>(y, dim));
    };
    // Surface integral over the radius-t sphere = t^(d-1) * unit-sphere sum.
    double surface = std::pow(q.t, dim - 1) * sphere.integrate(fn, q.x, q.t);
    return surface / (c_d * q.t);
}

double descent1d_solve(const ScalarFunction& g, const PointQuery& q,
                       const FractionalOrder& sigma,
                       const KernelQuadrature& quadr) {
    check_query(q);
    const double s = sigma.sigma();
    // sigma = 1/2 exactly is the seam between the two one-dimensional
    // formulas; both tend to (1/2) int_{x-t}^{x+t} g, which is what the
    // descent formula evaluates to at s = 1/2 (a limit evaluation, the
    // constant reduces to 1/2 and the weight to 1).
    if (!(s >= 0.5))
        throw std::invalid_argument(
            "descent1d_solve: requires sigma >= 1/2 (use kernel_low_solve "
            "below)");
    if (g.dim() != 1)
        throw std::invalid_argument("descent1d_solve: g must be 1-dimensional");
    const double c =
        s * std::tgamma(s) / (std::sqrt(M_PI) * std::tgamma(s + 0.5));
    // Weight exponent is negative beta = -(s - 1/2) <= 0, i.e. a bounded
    // weight vanishing at the endpoints; the Jacobi rule absorbs it too.
    return c * ball_integral(g, q, 1, 0.5 - s, quadr);
}

double classical_d2_solve(const ScalarFunction& g, const PointQuery& q,
                          const KernelQuadrature& quadr) {
    check_query(q);
    if (g.dim() != 2)
        throw std::invalid_argument("classical_d2_solve: g must be planar");
    return ball_integral(g, q, 2, 0.5, quadr) / (2.0 * M_PI);
}

double im_potential_low(double gamma, const ScalarFunction& g,
                        const PointQuery& q, int dim,
                        const KernelQuadrature& quadr) {
    check_query(q);
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("im_potential_low: gamma must be in (0,1)");
    double integral = ball_integral(g, q, dim, gamma, quadr);
    return -std::sin(gamma * M_PI) * std::pow(4.0, gamma) *
           std::tgamma(gamma) * integral;
}

double im_potential_high(double gamma, const ScalarFunction& g,
                         const PointQuery& q, int dim,
                         const KernelQuadrature& quadr) {
    check_query(q);
    if (!(gamma > 1.0 && gamma < 2.0))
        throw std::invalid_argument("im_potential_high: gamma must be in (1,2)");
    const double beta = gamma - 1.0;
    double integral = ball_integral_graded(g, q, dim, beta,
                                           dim - 2.0 * beta, quadr);
    return -std::sin(beta * M_PI) * std::pow(4.0, beta) * std::tgamma(beta) *
           (2.0 / (q.t * q.t)) * integral;
}

} // namespace fracwave::kernels
