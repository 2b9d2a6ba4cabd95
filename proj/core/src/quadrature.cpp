#include "fracwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fracwave::quad {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix together with the first
// component of each eigenvector (all that Golub-Welsch needs).
// Implicit-shift QL, adapted from the classic imtql2 routine.
void tridiag_eigen_first_components(std::vector<double>& diag,
                                    std::vector<double>& off,
                                    std::vector<double>& first) {
    const int n = static_cast<int>(diag.size());
    first.assign(n, 0.0);
    if (n == 0) return;
    first[0] = 1.0;
    if (n == 1) return;
    off.resize(n, 0.0);  // off[n-1] used as workspace

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > 60)
                throw numerical_error("tridiagonal eigensolver failed to converge");
            double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * off[i];
                double b = c * off[i];
                r = std::hypot(f, g);
                off[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = first[i + 1];
                first[i + 1] = s * first[i] + c * f;
                first[i] = c * first[i] - s * f;
            }
            if (r == 0.0 && m - 1 >= l) continue;
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }

    // Sort ascending, carrying the first components along.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return diag[a] < diag[b]; });
    std::vector<double> d2(n), f2(n);
    for (int i = 0; i < n; ++i) {
        d2[i] = diag[idx[i]];
        f2[i] = first[idx[i]];
    }
    diag = std::move(d2);
    first = std::move(f2);
}

Rule golub_welsch(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("quadrature rule needs n >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("Jacobi weight exponents must exceed -1");

    std::vector<double> a(n), b(n - 1 > 0 ? n - 1 : 0);
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            a[0] = (beta - alpha) / (ab + 2.0);
        } else {
            double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
            a[k] = (beta * beta - alpha * alpha) / den;
        }
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1) {
            bk = 4.0 * (alpha + 1.0) * (beta + 1.0) /
                 ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            double t = 2.0 * k + ab;
            bk = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 (t * t * (t + 1.0) * (t - 1.0));
        }
        b[k - 1] = std::sqrt(bk);
    }

    // mu0 = total weight integral over [-1, 1]
    double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                     std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
    double mu0 = std::exp(log_mu0);

    std::vector<double> diag = a, off(n, 0.0), first;
    for (int k = 0; k + 1 < n; ++k) off[k] = b[k];
    tridiag_eigen_first_components(diag, off, first);

    Rule rule;
    rule.nodes = diag;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i)
        rule.weights[i] = mu0 * first[i] * first[i];
    return rule;
}

} // namespace

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, golub_welsch(n, 0.0, 0.0)).first;
    return it->second;
}

Rule gauss_jacobi(int n, double alpha, double beta) {
    return golub_welsch(n, alpha, beta);
}

namespace {

struct PassResult {
    cdouble value;
    double l1;
};

PassResult panel_pass(const ParamIntegrand& f, double a, double b, int panels,
                      const Rule& rule) {
    PassResult out{cdouble(0.0, 0.0), 0.0};
    const double width = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
        const double pa = a + k * width;
        const double mid = pa + 0.5 * width, half = 0.5 * width;
        cdouble acc(0.0, 0.0);
        double l1 = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            cdouble v = f(mid + half * rule.nodes[i]);
            acc += rule.weights[i] * v;
            l1 += rule.weights[i] * std::abs(v);
        }
        out.value += half * acc;
        out.l1 += std::abs(half) * l1;
    }
    return out;
}

} // namespace

PanelResult integrate_refining(const ParamIntegrand& f, double a, double b,
                               int panels, int nodes_per_panel, double abs_tol,
                               int max_doublings) {
    PanelResult res;
    if (a == b) return res;
    panels = std::max(1, panels);
    max_doublings = std::max(1, max_doublings);
    const Rule& rule = gauss_legendre(std::max(2, nodes_per_panel));

    PassResult prev = panel_pass(f, a, b, panels, rule);
    res.evaluations = panels * static_cast<long>(rule.nodes.size());
    for (int pass = 0; pass < max_doublings; ++pass) {
        panels *= 2;
        PassResult cur = panel_pass(f, a, b, panels, rule);
        res.evaluations += panels * static_cast<long>(rule.nodes.size());
        double change = std::abs(cur.value - prev.value);
        // The 8 eps * L1 floor stops refinement once round-off dominates.
        if (change <= std::max(abs_tol, 8e-16 * cur.l1)) {
            res.value = cur.value;
            res.abs_error = std::max(change, 2e-16 * cur.l1);
            return res;
        }
        prev = cur;
        if (pass == max_doublings - 1) {
            res.value = cur.value;
            res.abs_error = change;
            res.converged = false;
        }
    }
    return res;
}

} // namespace fracwave::quad
