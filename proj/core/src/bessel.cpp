#include "fracwave/bessel.hpp"

#include "fracwave/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fracwave {

namespace {

// Ascending series (r/2)^nu / Gamma(nu+1) * sum_k c_k,
// c_k = c_{k-1} * (-(r/2)^2) / (k (nu+k)). Long double accumulation keeps
// the alternating-sum cancellation below 1e-12 up to the crossover.
double bessel_j_series(double nu, double r) {
    const long double q = -0.25L * (long double)r * (long double)r;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 80; ++k) {
        term *= q / ((long double)k * ((long double)nu + k));
        sum += term;
        if (std::abs((double)term) < 1e-20L * std::abs((double)sum) && k > 4)
            break;
    }
    double prefactor_log = nu * std::log(0.5 * r) - std::lgamma(nu + 1.0);
    return (double)(sum * std::exp((long double)prefactor_log));
}

// Hankel expansion J_nu(r) ~ sqrt(2/(pi r)) (P cos chi - Q sin chi),
// chi = r - (nu/2 + 1/4) pi, with a_j = a_{j-1} (mu - (2j-1)^2) / (8 j),
// mu = 4 nu^2, and term_j = a_j / r^j (the 8^j lives inside a_j).
// Truncated at the smallest term.
double bessel_j_asymptotic(double nu, double r) {
    const double mu = 4.0 * nu * nu;
    double a = 1.0;
    double P = 1.0, Q = 0.0;
    double prev = 1.0;
    for (int j = 1; j <= 40; ++j) {
        double odd = 2.0 * j - 1.0;
        a *= (mu - odd * odd) / (8.0 * j);
        double term = a / std::pow(r, j);
        if (std::abs(term) > prev) break;  // divergence onset
        prev = std::abs(term);
        if (j % 2 == 1) {
            Q += (j % 4 == 1) ? term : -term;
        } else {
            P += (j % 4 == 2) ? -term : term;
        }
        if (std::abs(term) < 1e-18) break;
    }
    double chi = r - (0.5 * nu + 0.25) * M_PI;
    return std::sqrt(2.0 / (M_PI * r)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double detect_r_switch() {
    // Smallest candidate where series and asymptotics agree to 1e-13
    // across representative orders.
    const double nus[] = {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9};
    for (double r = 10.0; r <= 16.0; r += 1.0) {
        double worst = 0.0;
        for (double nu : nus) {
            double s = bessel_j_series(nu, r);
            double a = bessel_j_asymptotic(nu, r);
            worst = std::max(worst, std::abs(s - a));
        }
        if (worst < 1e-13) return r;
    }
    return 12.0;
}

} // namespace

BesselOrder::BesselOrder(double nu_) : nu(nu_) {
    if (!(std::abs(nu) < 1.0))
        throw std::invalid_argument("BesselOrder: |nu| must be < 1");
}

double bessel_r_switch() {
    static const double r_switch = detect_r_switch();
    return r_switch;
}

double bessel_j(BesselOrder order, double r) {
    const double nu = order.nu;
    if (!(r >= 0.0)) throw std::invalid_argument("bessel_j: r must be >= 0");
    if (r == 0.0) {
        if (nu < 0.0)
            throw std::invalid_argument("bessel_j: r = 0 is singular for nu < 0");
        return nu == 0.0 ? 1.0 : 0.0;
    }
    return r <= bessel_r_switch() ? bessel_j_series(nu, r)
                                  : bessel_j_asymptotic(nu, r);
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::bessel: return "bessel";
        case Backend::subordination: return "subordination";
        case Backend::kernel: return "kernel";
    }
    return "?";
}

MultiplierPlan build_multiplier_plan(const TorusGrid& grid,
                                     const FractionalOrder& sigma, double t,
                                     double m, NeumannZeroMode zero_mode) {
    if (!(t > 0.0))
        throw std::invalid_argument("build_multiplier_plan: t must be positive");
    if (!(m >= 0.0))
        throw std::invalid_argument("build_multiplier_plan: mass must be >= 0");
    const double s = sigma.sigma();
    const double gamma_1ms = std::tgamma(1.0 - s);
    const double gamma_s = std::tgamma(s);
    const double dir_coeff = gamma_1ms / std::pow(2.0, s);
    const double neu_coeff = s * std::pow(2.0, s) * gamma_s;
    const BesselOrder jp(s), jm(-s);

    MultiplierPlan plan{grid, s, t, m, zero_mode, {}, {}};
    plan.dirichlet.assign(grid.size(), 0.0);
    plan.neumann.assign(grid.size(), 0.0);

    // The multipliers depend on the frequency only through lambda, so
    // evaluate once per distinct radius.
    std::map<double, std::pair<double, double>> by_lambda;
    for (std::size_t i = 0; i < grid.size(); ++i)
        by_lambda.emplace(grid.freq_norm2(i) + m * m,
                          std::pair<double, double>{0.0, 0.0});

    std::vector<double> lambdas;
    lambdas.reserve(by_lambda.size());
    for (const auto& kv : by_lambda) lambdas.push_back(kv.first);

    std::vector<std::pair<double, double>> values(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t k) {
        const double lambda = lambdas[k];
        if (lambda == 0.0) {
            // Dirichlet limit (t|xi|)^sigma J_{-sigma} -> 2^sigma/Gamma(1-sigma)
            // cancels the coefficient; Neumann handled per zero-mode rule.
            double N = 0.0;
            if (zero_mode == NeumannZeroMode::analytic_limit)
                N = std::pow(t, 2.0 * s);
            values[k] = {1.0, N};
            return;
        }
        const double r = t * std::sqrt(lambda);
        const double rs = std::pow(r, s);
        double D = dir_coeff * rs * bessel_j(jm, r);
        double N = neu_coeff * rs * bessel_j(jp, r) * std::pow(lambda, -s);
        values[k] = {D, N};
    });
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        by_lambda[lambdas[k]] = values[k];

    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto dn = by_lambda[grid.freq_norm2(i) + m * m];
        plan.dirichlet[i] = dn.first;
        plan.neumann[i] = dn.second;
    }
    return plan;
}

namespace {

void check_band_pass(const SpectralField& g_hat, NeumannZeroMode rule,
                     double m) {
    if (m > 0.0 || rule != NeumannZeroMode::reject) return;
    double ref = 0.0;
    for (const auto& c : g_hat.coeffs) ref = std::max(ref, std::abs(c));
    std::size_t zero_index = 0;  // flat index of k = (0,...,0)
    if (std::abs(g_hat.coeffs[zero_index]) > 1e-13 * ref && ref > 0.0)
        throw std::invalid_argument(
            "solve: Neumann data must be band-passed (zero mean) when m = 0");
}

} // namespace

SolutionSnapshot solve_bessel(const std::optional<Field>& f,
                              const std::optional<Field>& g,
                              const FractionalOrder& sigma, double t, double m,
                              NeumannZeroMode zero_mode) {
    if (!f && !g)
        throw std::invalid_argument("solve_bessel: need at least one of f, g");
    const TorusGrid grid = f ? f->grid : g->grid;
    if (f && g && !(f->grid == g->grid))
        throw std::invalid_argument("solve_bessel: f and g grids differ");

    MultiplierPlan plan = build_multiplier_plan(grid, sigma, t, m, zero_mode);
    SpectralField u_hat(grid);
    if (f) {
        SpectralField f_hat = dft(*f);
        for (std::size_t i = 0; i < u_hat.coeffs.size(); ++i)
            u_hat.coeffs[i] += plan.dirichlet[i] * f_hat.coeffs[i];
    }
    if (g) {
        SpectralField g_hat = dft(*g);
        check_band_pass(g_hat, zero_mode, m);
        for (std::size_t i = 0; i < u_hat.coeffs.size(); ++i)
            u_hat.coeffs[i] += plan.neumann[i] * g_hat.coeffs[i];
    }
    return SolutionSnapshot{t, idft(u_hat), Backend::bessel, sigma.sigma(), m};
}

double fixedtime_ratio(const std::optional<Field>& f,
                       const std::optional<Field>& g,
                       const FractionalOrder& sigma, double t, double s,
                       NeumannZeroMode zero_mode) {
    if (!f && !g) return 0.0;
    const double sg = sigma.sigma();
    SolutionSnapshot u = solve_bessel(f, g, sigma, t, 0.0, zero_mode);
    double lhs = sobolev_norm(u.field, s);

    double rhs = 0.0;
    if (sg <= 0.5) {
        if (f) rhs += sobolev_norm(*f, s);
        if (g) rhs += std::pow(t, 2.0 * sg) * l2_norm(*g) +
                      sobolev_norm(*g, s - 2.0 * sg);
    } else {
        if (f)
            rhs += std::pow(1.0 + t, sg - 0.5) * sobolev_norm(*f, s + sg - 0.5);
        if (g)
            rhs += std::pow(t, 2.0 * sg) * l2_norm(*g) +
                   std::pow(t, sg - 0.5) * sobolev_norm(*g, s - sg - 0.5);
    }
    if (rhs == 0.0) return 0.0;
    return lhs / rhs;
}

} // namespace fracwave
