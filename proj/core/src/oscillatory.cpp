#include "fracwave/oscillatory.hpp"

#include <algorithm>
#include <cmath>

namespace fracwave::osc {

namespace {

constexpr double kLogCut = 45.0;  // e^-45 ~ 3e-20 relative truncation

// exp(-i(z + A^2/z) + (p-1) log z), assembled in the exponent so that the
// huge intermediate factors on deformed paths never overflow.
cdouble integrand(cdouble z, double p, double A) {
    cdouble w = cdouble(0.0, -1.0) * (z + (A * A) / z) + (p - 1.0) * std::log(z);
    if (w.real() < -745.0) return {0.0, 0.0};
    return std::exp(w);
}

struct PieceSum {
    cdouble value{0.0, 0.0};
    double err = 0.0;
    bool converged = true;

    void add(const quad::PanelResult& r) {
        value += r.value;
        err += r.abs_error;
        converged = converged && r.converged;
    }
    void add(const PieceSum& s, double sign = 1.0) {
        value += sign * s.value;
        err += s.err;
        converged = converged && s.converged;
    }
};

// Ray z = rho e^{i theta}, integrated in v = log rho.
quad::PanelResult ray_log(double p, double A, double theta, double r0,
                          double r1, const QuadratureSpec& spec, double tol) {
    if (!(r0 < r1)) return {};
    const cdouble phase(std::cos(theta), std::sin(theta));
    auto f = [=](double v) {
        double rho = std::exp(v);
        cdouble z = rho * phase;
        return integrand(z, p, A) * z;  // dz = z dv
    };
    const double v0 = std::log(r0), v1 = std::log(r1);
    int panels = std::max(spec.initial_panels,
                          static_cast<int>((v1 - v0) / 3.0) + 1);
    return quad::integrate_refining(f, v0, v1, panels, spec.nodes_per_panel,
                                    tol, spec.max_doublings);
}

// Arc |z| = q from the real axis out to elevation theta0, traversed away
// from the axis (upper = +, lower = -). Damped like e^{-kappa sin theta}
// with kappa = |q - A^2/q|; oscillation rate omega = q + A^2/q near the
// axis. Chunked geometrically in theta so that arbitrarily stiff arcs
// (q far from A) stay cheap.
PieceSum arc_away(double p, double A, double q, bool upper, double theta0,
                  const QuadratureSpec& spec, double tol) {
    PieceSum out;
    const double sgn = upper ? 1.0 : -1.0;
    const double kappa = std::abs(q - (A * A) / q);
    const double omega = q + (A * A) / q;
    auto f = [=](double th) {
        cdouble z = q * cdouble(std::cos(sgn * th), std::sin(sgn * th));
        return integrand(z, p, A) * cdouble(0.0, sgn) * z;
    };
    double delta = std::min(theta0, 0.25 / std::max({kappa, omega, 1.0}));
    std::vector<double> edges{0.0, delta};
    while (edges.back() < theta0)
        edges.push_back(std::min(theta0, edges.back() * 2.0));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double a = edges[i], b = edges[i + 1];
        if (kappa * std::sin(a) > kLogCut + 10.0) {
            // Everything past the decay horizon: bound, don't integrate.
            double log_mag = (p - 1.0) * std::log(q) - kappa * std::sin(a);
            out.err += (log_mag < -745.0) ? 0.0 : std::exp(log_mag) * q * (b - a);
            continue;
        }
        double phase_span = omega * std::abs(std::cos(a) - std::cos(b));
        int panels = static_cast<int>(
            std::clamp(4.0 + phase_span / 2.0, double(spec.initial_panels), 512.0));
        out.add(quad::integrate_refining(f, a, b, panels, spec.nodes_per_panel,
                                         tol, spec.max_doublings));
    }
    return out;
}

// Log-magnitude of the integrand on the upper ray at elevation theta.
double log_mag_upper(double rho, double p, double A, double sin_t) {
    return (rho - (A * A) / rho) * sin_t + (p - 1.0) * std::log(rho);
}
double log_mag_lower(double rho, double p, double A, double sin_t) {
    return -(rho - (A * A) / rho) * sin_t + (p - 1.0) * std::log(rho);
}

// Inner truncation radius: largest rho below which the upper-ray integrand
// stays under e^-45 relative to exp(log_scale). Monotone bisection.
double inner_cutoff(double p, double A, double sin_t, double cap,
                    double log_scale) {
    const double thresh = log_scale - kLogCut;
    if (log_mag_upper(cap, p, A, sin_t) < thresh) return cap;  // all dead
    double lo = std::min(1e-280, cap), hi = cap;
    for (int i = 0; i < 200; ++i) {
        double mid = std::sqrt(lo * hi);
        if (log_mag_upper(mid, p, A, sin_t) < thresh)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Outer truncation radius on the lower ray.
double outer_cutoff(double p, double A, double sin_t, double start,
                    double log_scale, double r_tail) {
    const double thresh = log_scale - kLogCut;
    double lo = start, hi = std::max(2.0 * start, r_tail);
    while (log_mag_lower(hi, p, A, sin_t) > thresh) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = std::sqrt(lo * hi);
        if (log_mag_lower(mid, p, A, sin_t) > thresh)
            lo = mid;
        else
            hi = mid;
    }
    return std::max(hi, std::min(r_tail, 1e300));
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(theta_ray > M_PI / 2.0 && theta_ray < M_PI))
        throw std::invalid_argument(
            "QuadratureSpec: theta_ray must lie in (pi/2, pi)");
    if (!(r_tail > 0.0))
        throw std::invalid_argument("QuadratureSpec: r_tail must be positive");
    if (!(window_factor > 0.0))
        throw std::invalid_argument(
            "QuadratureSpec: window_factor must be positive");
    if (nodes_per_panel < 2 || initial_panels < 1 || max_doublings < 1)
        throw std::invalid_argument("QuadratureSpec: degenerate panel setup");
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
}

std::string path_piece_name(PathPiece p) {
    switch (p) {
        case PathPiece::inner_ray: return "inner_ray";
        case PathPiece::inner_arc: return "inner_arc";
        case PathPiece::real_panel: return "real_panel";
        case PathPiece::outer_arc: return "outer_arc";
        case PathPiece::outer_ray: return "outer_ray";
    }
    return "?";
}

OscillatoryValue oscillatory_power_integral(double p, double A,
                                            const QuadratureSpec& spec) {
    spec.validate();
    if (A < 0.0) throw std::invalid_argument("oscillatory integral: A < 0");
    const double theta0 = spec.theta0();
    const double sin_t0 = std::sin(theta0);
    OscillatoryValue out;

    if (A == 0.0) {
        if (!(p > 0.0))
            throw std::invalid_argument(
                "oscillatory integral: p must be positive when A = 0");
        // No saddle: rotate straight down. The endpoint power s^(p-1) is
        // integrated in log space; the tail decays like e^{-rho sin theta0}.
        const double r1 = 1.0;
        PieceSum sum;
        sum.add(ray_log(p, A, -theta0, std::exp(-kLogCut / p), r1, spec,
                        spec.abs_tol / 2.0));
        double rcut = std::max(r1 + kLogCut / sin_t0, spec.r_tail);
        sum.add(ray_log(p, A, -theta0, r1, rcut, spec, spec.abs_tol / 2.0));
        if (!sum.converged)
            throw numerical_error("oscillatory integral did not converge (A=0)");
        out.value = sum.value;
        out.abs_error_estimate = sum.err + std::exp(-kLogCut) / p;
        out.path = {PathPiece::outer_ray};
        return out;
    }

    // Stationary point of s + A^2/s at s = A; real panel [a, b] across it.
    const double w = std::min(0.5 * A, spec.window_factor * std::sqrt(A));
    const double a = A - w, b = A + w;
    const double log_scale = (p - 1.0) * std::log(A) + std::log(2.0 * w);

    PieceSum sum;
    double trunc_err = 0.0;

    const double rmin = inner_cutoff(p, A, sin_t0, a, log_scale);
    if (rmin > std::min(1e-280, a) * 1.0001 && rmin < a)
        trunc_err += std::exp(log_scale - kLogCut);
    sum.add(ray_log(p, A, theta0, rmin, a, spec, spec.abs_tol / 5.0));
    out.path.push_back(PathPiece::inner_ray);

    // Inner arc traversed theta0 -> 0 equals minus the away-from-axis arc.
    sum.add(arc_away(p, A, a, true, theta0, spec, spec.abs_tol / 10.0), -1.0);
    out.path.push_back(PathPiece::inner_arc);

    {
        auto f = [=](double s) { return integrand(cdouble(s, 0.0), p, A); };
        sum.add(quad::integrate_refining(f, a, b, spec.initial_panels,
                                         spec.nodes_per_panel,
                                         spec.abs_tol / 5.0,
                                         spec.max_doublings));
        out.path.push_back(PathPiece::real_panel);
    }

    sum.add(arc_away(p, A, b, false, theta0, spec, spec.abs_tol / 10.0));
    out.path.push_back(PathPiece::outer_arc);

    const double rcut =
        outer_cutoff(p, A, sin_t0, b, log_scale, spec.r_tail);
    sum.add(ray_log(p, A, -theta0, b, rcut, spec, spec.abs_tol / 5.0));
    trunc_err += std::exp(log_scale - kLogCut);
    out.path.push_back(PathPiece::outer_ray);

    if (!sum.converged)
        throw numerical_error("oscillatory integral did not converge");
    out.value = sum.value;
    out.abs_error_estimate = sum.err + trunc_err;
    return out;
}

namespace {

// int_0^x of the truncated-integral integrand, 0 < x <= A: up-ray to
// |z| = x, then arc back down to the real axis.
PieceSum head_integral(double p, double A, double x,
                       const QuadratureSpec& spec, double tol) {
    PieceSum out;
    const double theta0 = spec.theta0();
    const double sin_t0 = std::sin(theta0);
    const double log_scale = (p - 1.0) * std::log(x);
    double rmin = inner_cutoff(p, A, sin_t0, x, log_scale);
    out.add(ray_log(p, A, theta0, rmin, x, spec, tol / 2.0));
    out.add(arc_away(p, A, x, true, theta0, spec, tol / 2.0), -1.0);
    out.err += std::exp(log_scale - kLogCut);
    return out;
}

// int_x^inf, x >= A: arc down from the real axis, then the outgoing ray.
PieceSum tail_integral(double p, double A, double x,
                       const QuadratureSpec& spec, double tol) {
    PieceSum out;
    const double theta0 = spec.theta0();
    const double sin_t0 = std::sin(theta0);
    const double log_scale = (p - 1.0) * std::log(x);
    out = arc_away(p, A, x, false, theta0, spec, tol / 2.0);
    double rcut = outer_cutoff(p, A, sin_t0, x, log_scale, spec.r_tail);
    out.add(ray_log(p, A, -theta0, x, rcut, spec, tol / 2.0));
    out.err += std::exp(log_scale - kLogCut);
    return out;
}

} // namespace

cdouble gamma_oscillatory(const FractionalOrder& sigma,
                          const QuadratureSpec& spec) {
    OscillatoryValue v = oscillatory_power_integral(sigma.sigma(), 0.0, spec);
    return sigma.i_sigma() * v.value;
}

OscillatoryValue symbol_I(const FractionalOrder& sigma, double lambda,
                          double t, const QuadratureSpec& spec) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("symbol_I: lambda < 0");
    if (!(t > 0.0)) throw std::invalid_argument("symbol_I: t must be positive");
    const double A = 0.5 * t * std::sqrt(lambda);
    OscillatoryValue raw = oscillatory_power_integral(sigma.sigma(), A, spec);
    const cdouble factor = sigma.i_sigma() / std::tgamma(sigma.sigma());
    OscillatoryValue out;
    out.value = factor * raw.value;
    out.abs_error_estimate = std::abs(factor) * raw.abs_error_estimate;
    out.path = std::move(raw.path);
    return out;
}

cdouble symbol_dtn(const FractionalOrder& sigma, double lambda, double t,
                   const QuadratureSpec& spec) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("symbol_dtn: lambda must be positive");
    FractionalOrder conj(1.0 - sigma.sigma());
    OscillatoryValue I = symbol_I(conj, lambda, t, spec);
    return sigma.dtn_constant() * std::pow(lambda, sigma.sigma()) * I.value;
}

cdouble truncated_integral(const FractionalOrder& sigma, double lambda,
                           double t, double eps, double R, int k,
                           const QuadratureSpec& spec) {
    spec.validate();
    if (!(0.0 < eps && eps < R))
        throw std::invalid_argument("truncated_integral: need 0 < eps < R");
    if (k < 1 || k > 3)
        throw std::invalid_argument("truncated_integral: k must be 1, 2 or 3");
    if (!(lambda >= 0.0 && t > 0.0))
        throw std::invalid_argument("truncated_integral: invalid lambda or t");
    const double p = sigma.sigma() - k + 1;
    const double A = 0.5 * t * std::sqrt(lambda);
    const double tol = spec.abs_tol;

    if (A == 0.0) {
        // No inner phase; rotate both endpoints down.
        PieceSum lo = tail_integral(p, A, eps, spec, tol);
        PieceSum hi = tail_integral(p, A, R, spec, tol);
        return lo.value - hi.value;
    }
    if (R <= A) {
        PieceSum hi = head_integral(p, A, R, spec, tol);
        PieceSum lo = head_integral(p, A, eps, spec, tol);
        return hi.value - lo.value;
    }
    if (eps >= A) {
        PieceSum lo = tail_integral(p, A, eps, spec, tol);
        PieceSum hi = tail_integral(p, A, R, spec, tol);
        return lo.value - hi.value;
    }
    OscillatoryValue full = oscillatory_power_integral(p, A, spec);
    PieceSum head = head_integral(p, A, eps, spec, tol);
    PieceSum tail = tail_integral(p, A, R, spec, tol);
    return full.value - head.value - tail.value;
}

double ode_residual_I(const FractionalOrder& sigma, double lambda, double t,
                      double h, const QuadratureSpec& spec) {
    if (!(t > h && h > 0.0))
        throw std::invalid_argument("ode_residual_I: need t > h > 0");
    cdouble Im = symbol_I(sigma, lambda, t - h, spec).value;
    cdouble I0 = symbol_I(sigma, lambda, t, spec).value;
    cdouble Ip = symbol_I(sigma, lambda, t + h, spec).value;
    cdouble d2 = (Ip - 2.0 * I0 + Im) / (h * h);
    cdouble d1 = (Ip - Im) / (2.0 * h);
    cdouble res = d2 + ((1.0 - 2.0 * sigma.sigma()) / t) * d1 + lambda * I0;
    return std::abs(res);
}

OscillatoryValue modified_bessel_K_imag(const FractionalOrder& sigma, double r,
                                        const QuadratureSpec& spec) {
    if (!(r > 0.0))
        throw std::invalid_argument("modified_bessel_K_imag: r must be positive");
    OscillatoryValue raw =
        oscillatory_power_integral(-sigma.sigma(), 0.5 * r, spec);
    const double factor =
        std::pow(r, sigma.sigma()) / std::pow(2.0, 1.0 + sigma.sigma());
    OscillatoryValue out;
    out.value = factor * raw.value;
    out.abs_error_estimate = factor * raw.abs_error_estimate;
    out.path = std::move(raw.path);
    return out;
}

} // namespace fracwave::osc
