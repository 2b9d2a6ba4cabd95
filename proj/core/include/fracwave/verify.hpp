#pragma once

#include "fracwave/types.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracwave::verify {

/// Fixed default seed for every randomized ensemble; recorded in the
/// reports so reruns are bit-identical.
inline constexpr std::uint64_t kDefaultSeed = 9127350u;

struct CheckReport {
    std::string name;
    std::string params;  // compact JSON object text
    double metric = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // metric <= tolerance, set by make_report
    double runtime_seconds = 0.0;
};

/// Times `metric_fn`, then builds a report with passed == (metric <= tol).
CheckReport run_check(const std::string& name, const std::string& params,
                      double tolerance, const std::function<double()>& metric_fn);

struct BackendCompareConfig {
    std::vector<int> dims{1, 2, 3};
    std::vector<double> sigmas{0.25, 0.5, 0.75};
    std::vector<double> times{0.3, 1.0};
    double tolerance = 1e-6;
    std::uint64_t seed = kDefaultSeed;
};

/// Relative L2 differences between the subordination and Bessel backends
/// on band-passed bumps, Dirichlet and Neumann channels separately.
std::vector<CheckReport> run_backend_compare(const BackendCompareConfig& cfg = {});

struct ResidualConfig {
    std::vector<double> sigmas{0.3, 0.7};
    double t = 1.0;
    double h = 1e-3;
    double tolerance = 1e-4;
};

/// Discrete wave-equation residuals of the spectral backends, plus the
/// quadrature-limited kernel-backend residual at d = 2.
std::vector<CheckReport> run_pde_residual(const ResidualConfig& cfg = {});

/// Distances from the kernel solutions to the spherical-mean limit along a
/// sigma sequence approaching the d-specific limit; reports monotone
/// decrease and the final distance.
std::vector<CheckReport> run_limit_study(int dim,
                                         const std::vector<double>& sigmas);

/// Empirical sup-bound suite: truncated-integral uniform bounds, the
/// derivative growth exponent, the k = 3 divergence flag, the fixed-time
/// Sobolev ratios, and the Bessel magnitude envelope.
std::vector<CheckReport> run_bound_suite(std::uint64_t seed = kDefaultSeed);

struct Criterion {
    int id = 0;
    std::string label;
    std::vector<CheckReport> checks;
    bool passed = false;
    double runtime_seconds = 0.0;
};

/// The full acceptance suite (criteria 1-11), each criterion an aggregate
/// of named checks at pinned tolerances.
std::vector<Criterion> acceptance_criteria();

std::string reports_to_json(const std::vector<CheckReport>& reports,
                            std::uint64_t seed = kDefaultSeed);
std::string criteria_to_json(const std::vector<Criterion>& criteria,
                             std::uint64_t seed = kDefaultSeed);

/// Human-readable summary table, one line per check.
void print_summary(std::ostream& os, const std::vector<CheckReport>& reports);

} // namespace fracwave::verify
