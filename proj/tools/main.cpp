// fracwave: solvers for the degenerate wave extension problem
//   d_t^2 u + ((1-2 sigma)/t) d_t u = Delta u
// with three backends (Bessel multipliers, oscillatory subordination,
// ball kernels) and a verification suite cross-checking them.
//
// Exit codes: 0 success, 1 numerical failure, 2 validation failure.

#include "fracwave/bessel.hpp"
#include "fracwave/io.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/oscillatory.hpp"
#include "fracwave/subordination.hpp"
#include "fracwave/testdata.hpp"
#include "fracwave/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace fracwave;

#ifndef FRACWAVE_VERSION_STRING
#define FRACWAVE_VERSION_STRING "0.1.0"
#endif

namespace {

struct CommonOpts {
    double sigma = 0.5;
    int dim = 1;
    int n = 64;
    double box = 16.0;
    double mass = 0.0;
    std::uint64_t seed = verify::kDefaultSeed;
    std::string out_dir = ".";
    std::string config_path;
    // data spec
    double bump_width_frac = 0.1;  // fraction of box
    double band_lo_frac = 0.15;    // fraction of the Nyquist radius
    double band_hi_frac = 0.6;
    std::string data_kind = "bump";  // bump | trig
    int trig_modes = 10;
};

// Loads JSON config defaults into the bound option variables before CLI11
// parses the command line, so explicit flags override file values.
json load_config_json(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in)
                throw CLI::ValidationError("--config",
                                           std::string("cannot open ") +
                                               argv[i + 1]);
            json j;
            in >> j;
            return j;
        }
    }
    return json::object();
}

template <typename T>
void from_config(const json& cfg, const char* key, T& value) {
    if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

void apply_config(const json& cfg, CommonOpts& o) {
    from_config(cfg, "sigma", o.sigma);
    from_config(cfg, "d", o.dim);
    from_config(cfg, "n", o.n);
    from_config(cfg, "box_length", o.box);
    from_config(cfg, "mass", o.mass);
    from_config(cfg, "seed", o.seed);
    from_config(cfg, "out_dir", o.out_dir);
    from_config(cfg, "bump_width_frac", o.bump_width_frac);
    from_config(cfg, "band_lo_frac", o.band_lo_frac);
    from_config(cfg, "band_hi_frac", o.band_hi_frac);
    from_config(cfg, "data", o.data_kind);
    from_config(cfg, "trig_modes", o.trig_modes);
}

void add_common_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path,
                    "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    cmd->add_option("--sigma", o.sigma, "fractional order, in (0,1)");
    cmd->add_option("--d", o.dim, "spatial dimension (1-3 for grids)");
    cmd->add_option("--n", o.n, "grid points per axis (power of two)");
    cmd->add_option("--box", o.box, "torus box length");
    cmd->add_option("--mass", o.mass, "Klein-Gordon mass m >= 0");
    cmd->add_option("--seed", o.seed, "seed for generated data");
    cmd->add_option("--out-dir", o.out_dir, "output directory");
    cmd->add_option("--bump-width", o.bump_width_frac,
                    "bump width as a fraction of the box");
    cmd->add_option("--band-lo", o.band_lo_frac,
                    "band-pass lower edge (fraction of Nyquist)");
    cmd->add_option("--band-hi", o.band_hi_frac,
                    "band-pass upper edge (fraction of Nyquist)");
    cmd->add_option("--data", o.data_kind, "test data kind: bump | trig");
    cmd->add_option("--trig-modes", o.trig_modes,
                    "mode count for --data trig");
}

TorusGrid make_grid(const CommonOpts& o) { return TorusGrid(o.dim, o.n, o.box); }

struct GeneratedData {
    Field field;
    std::unique_ptr<ScalarFunction> closure;  // evaluable anywhere
};

GeneratedData make_data(const CommonOpts& o, const TorusGrid& grid) {
    if (o.data_kind == "trig") {
        auto p = std::make_unique<TrigPolynomial>(random_trig_polynomial(
            grid, o.band_lo_frac * grid.nyquist_radius(),
            o.band_hi_frac * grid.nyquist_radius(), o.trig_modes, o.seed));
        Field f = p->sample(grid);
        return {std::move(f), std::move(p)};
    }
    if (o.data_kind != "bump")
        throw std::invalid_argument("--data must be 'bump' or 'trig'");
    GaussianSum::Bump bump;
    for (int a = 0; a < grid.dim; ++a) bump.center[a] = 0.5 * grid.box_length;
    bump.width = o.bump_width_frac * grid.box_length;
    BandSpec band{o.band_lo_frac * grid.nyquist_radius(),
                  o.band_hi_frac * grid.nyquist_radius()};
    Field f = make_test_data(grid,
                             std::span<const GaussianSum::Bump>(&bump, 1), band)
                  .field;
    auto closure = std::make_unique<SpectralInterpolant>(f);
    return {std::move(f), std::move(closure)};
}

json effective_config(const CommonOpts& o) {
    return json{{"sigma", o.sigma},
                {"d", o.dim},
                {"n", o.n},
                {"box_length", o.box},
                {"mass", o.mass},
                {"seed", o.seed},
                {"data", o.data_kind},
                {"bump_width_frac", o.bump_width_frac},
                {"band_lo_frac", o.band_lo_frac},
                {"band_hi_frac", o.band_hi_frac},
                {"version", FRACWAVE_VERSION_STRING}};
}

void write_solution(const std::filesystem::path& dir, const std::string& stem,
                    const SolutionSnapshot& u, const json& extra) {
    std::filesystem::create_directories(dir);
    std::string csv = (dir / (stem + ".csv")).string();
    io::write_field_csv(csv, u.field);
    json meta = extra;
    meta["backend"] = backend_name(u.backend);
    meta["t"] = u.t;
    io::atomic_write_text((dir / (stem + ".json")).string(),
                          io::manifest_json(u.field.grid, stem + ".csv",
                                            meta.dump()));
}

// "a:b:step" or a single value.
std::vector<double> parse_range(const std::string& text) {
    std::vector<double> out;
    auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        out.push_back(std::stod(text));
        return out;
    }
    auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::invalid_argument("range must be lo:hi:step");
    double lo = std::stod(text.substr(0, c1));
    double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    double step = std::stod(text.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo)
        throw std::invalid_argument("range must satisfy lo <= hi, step > 0");
    for (double v = lo; v <= hi + 1e-12 * step; v += step) out.push_back(v);
    return out;
}

int cmd_solve(const CommonOpts& o, const std::string& backend,
              const std::string& problem, double t) {
    FractionalOrder sigma(o.sigma);
    TorusGrid grid = make_grid(o);
    GeneratedData generated = make_data(o, grid);
    const Field& data = generated.field;
    if (!(t > 0.0)) throw std::invalid_argument("--t must be positive");

    const bool want_f = problem == "dirichlet" || problem == "cauchy";
    const bool want_g = problem == "neumann" || problem == "cauchy";
    if (!want_f && !want_g)
        throw std::invalid_argument(
            "--problem must be dirichlet, neumann or cauchy");

    std::optional<Field> f = want_f ? std::optional<Field>(data) : std::nullopt;
    std::optional<Field> g = want_g ? std::optional<Field>(data) : std::nullopt;

    json extra = effective_config(o);
    extra["problem"] = problem;
    std::filesystem::path dir(o.out_dir);

    auto solve_spectral = [&](Backend which) {
        if (which == Backend::bessel)
            return solve_bessel(f, g, sigma, t, o.mass);
        // subordination: combine the real Dirichlet / Neumann channels
        SolutionSnapshot u{t, Field(grid), Backend::subordination, o.sigma,
                           o.mass};
        if (f) u.field = solve_dirichlet_real(*f, sigma, t, o.mass).field;
        if (g) {
            Field ng = solve_neumann_real(*g, sigma, t, o.mass).field;
            u.field = f ? u.field + ng : ng;
        }
        return u;
    };

    std::vector<std::string> stems;
    if (backend == "bessel" || backend == "all") {
        write_solution(dir, "solution_bessel", solve_spectral(Backend::bessel),
                       extra);
        stems.push_back("solution_bessel");
    }
    if (backend == "subordination" || backend == "all") {
        write_solution(dir, "solution_subordination",
                       solve_spectral(Backend::subordination), extra);
        stems.push_back("solution_subordination");
    }
    if (backend == "kernel" || backend == "all") {
        if (!want_g || want_f)
            throw std::invalid_argument(
                "kernel backend solves the Neumann problem only "
                "(--problem neumann)");
        if (o.dim > 3)
            throw std::invalid_argument("kernel solve on a grid needs d <= 3");
        // Kernel solves are pointwise; evaluate along the axis-0 grid line
        // through the box center.
        auto spec = kernels::KernelSpec::make(o.dim, sigma);
        if (spec.regime == kernels::KernelRegime::limit)
            throw std::invalid_argument(
                "kernel backend: gamma = d/2 - sigma = 1 exactly; use "
                "kernel-eval --op sphere-mean");
        if (o.mass != 0.0)
            throw std::invalid_argument("kernel backend requires m = 0");
        const ScalarFunction& gi = *generated.closure;
        std::ostringstream csv;
        csv << "x0,t,u\n";
        for (int k = 0; k < grid.n; ++k) {
            kernels::PointQuery q;
            q.x[0] = grid.coordinate(k);
            for (int a = 1; a < o.dim; ++a) q.x[a] = 0.5 * grid.box_length;
            q.t = t;
            double u = spec.regime == kernels::KernelRegime::low
                           ? kernels::kernel_low_solve(gi, q, spec)
                           : kernels::kernel_high_solve(gi, q, spec);
            csv << io::format_double(q.x[0]) << ',' << io::format_double(t)
                << ',' << io::format_double(u) << '\n';
        }
        std::filesystem::create_directories(dir);
        io::atomic_write_text((dir / "solution_kernel.csv").string(),
                              csv.str());
        json meta = extra;
        meta["backend"] = "kernel";
        meta["t"] = t;
        meta["note"] = "pointwise kernel solve along the axis-0 center line";
        io::atomic_write_text(
            (dir / "solution_kernel.json").string(),
            io::manifest_json(grid, "solution_kernel.csv", meta.dump()));
        stems.push_back("solution_kernel");
    }

    if (backend == "all") {
        Field ub = io::read_field_csv((dir / "solution_bessel.csv").string(),
                                      grid);
        Field us = io::read_field_csv(
            (dir / "solution_subordination.csv").string(), grid);
        json diff;
        diff["bessel_vs_subordination_rel_l2"] = rel_l2_error(us, ub);
        std::printf("diff bessel vs subordination: rel L2 = %.3e\n",
                    rel_l2_error(us, ub));
        io::atomic_write_text((dir / "diff_summary.json").string(),
                              diff.dump(2) + "\n");
    } else if (backend != "bessel" && backend != "subordination" &&
               backend != "kernel") {
        throw std::invalid_argument(
            "--backend must be bessel, subordination, kernel or all");
    }
    std::printf("wrote %zu solution file(s) to %s\n", stems.size(),
                o.out_dir.c_str());
    return 0;
}

int cmd_symbol_table(double sigma_v, const std::string& lambda_range,
                     const std::vector<double>& ts, const std::string& out) {
    FractionalOrder sigma(sigma_v);
    std::vector<double> lambdas = parse_range(lambda_range);
    if (ts.empty()) throw std::invalid_argument("need at least one --t");
    std::ostringstream csv;
    csv << "sigma,lambda,t,re,im,err\n";
    for (double t : ts) {
        if (!(t > 0.0)) throw std::invalid_argument("--t must be positive");
        for (double lambda : lambdas) {
            osc::OscillatoryValue v = osc::symbol_I(sigma, lambda, t);
            csv << io::format_double(sigma_v) << ','
                << io::format_double(lambda) << ',' << io::format_double(t)
                << ',' << io::format_double(v.value.real()) << ','
                << io::format_double(v.value.imag()) << ','
                << io::format_double(v.abs_error_estimate) << '\n';
        }
    }
    io::atomic_write_text(out, csv.str());
    std::printf("wrote %zu symbol rows to %s\n", lambdas.size() * ts.size(),
                out.c_str());
    return 0;
}

int cmd_multiplier_dump(const CommonOpts& o, double t, const std::string& out) {
    FractionalOrder sigma(o.sigma);
    TorusGrid grid = make_grid(o);
    MultiplierPlan plan = build_multiplier_plan(grid, sigma, t, o.mass,
                                                NeumannZeroMode::analytic_limit);
    // radial profile: one row per distinct |xi|
    std::map<double, std::pair<double, double>> profile;
    for (std::size_t i = 0; i < grid.size(); ++i)
        profile[std::sqrt(grid.freq_norm2(i))] = {plan.dirichlet[i],
                                                  plan.neumann[i]};
    std::ostringstream csv;
    csv << "abs_xi,dirichlet,neumann\n";
    for (const auto& [r, dn] : profile)
        csv << io::format_double(r) << ',' << io::format_double(dn.first)
            << ',' << io::format_double(dn.second) << '\n';
    io::atomic_write_text(out, csv.str());
    std::printf("wrote %zu multiplier rows to %s\n", profile.size(),
                out.c_str());
    return 0;
}

int cmd_kernel_eval(const CommonOpts& o, const std::string& op, double t,
                    const std::string& range, const std::vector<double>& at,
                    double g_width, const std::string& out) {
    FractionalOrder sigma(o.sigma);
    std::vector<double> xs = parse_range(range);
    GaussianSum::Bump bump;
    bump.width = g_width;
    GaussianSum g(o.dim, {bump});

    auto eval = [&](const kernels::PointQuery& q) {
        if (op == "low")
            return kernels::kernel_low_solve(g, q,
                                             kernels::KernelSpec::make(o.dim, sigma));
        if (op == "high")
            return kernels::kernel_high_solve(
                g, q, kernels::KernelSpec::make(o.dim, sigma));
        if (op == "sphere-mean")
            return kernels::spherical_mean_solve(g, q, o.dim);
        if (op == "descent")
            return kernels::descent1d_solve(g, q, sigma);
        if (op == "classical-d2")
            return kernels::classical_d2_solve(g, q);
        throw std::invalid_argument(
            "--op must be low, high, sphere-mean, descent or classical-d2");
    };

    std::ostringstream csv;
    for (int a = 0; a < o.dim; ++a) csv << 'x' << a << ',';
    csv << "t,u\n";
    for (double x : xs) {
        kernels::PointQuery q;
        q.x[0] = x;
        for (int a = 1; a < o.dim; ++a)
            q.x[a] = (a - 1) < static_cast<int>(at.size()) ? at[a - 1] : 0.0;
        q.t = t;
        double u = eval(q);
        for (int a = 0; a < o.dim; ++a)
            csv << io::format_double(q.x[a]) << ',';
        csv << io::format_double(t) << ',' << io::format_double(u) << '\n';
    }
    io::atomic_write_text(out, csv.str());
    std::printf("wrote %zu kernel evaluations to %s\n", xs.size(), out.c_str());
    return 0;
}

int cmd_dtn(const CommonOpts& o, const std::vector<double>& ts,
            const std::string& out) {
    FractionalOrder sigma(o.sigma);
    TorusGrid grid = make_grid(o);
    Field data = make_data(o, grid).field;
    std::vector<double> seq = ts;
    if (seq.empty()) seq = {0.08, 0.04, 0.02, 0.01};

    Field ext = dtn_extract(data, sigma, seq, o.mass);
    Field recovered = (1.0 / sigma.dtn_constant()) * ext;
    SpectralField data_hat = dft(data);
    for (std::size_t i = 0; i < data_hat.coeffs.size(); ++i)
        data_hat.coeffs[i] *=
            std::pow(grid.freq_norm2(i) + o.mass * o.mass, o.sigma);
    Field oracle = idft(data_hat);

    std::ostringstream csv;
    const char* headers[3] = {"i", "j", "k"};
    for (int a = 0; a < grid.dim; ++a) csv << headers[a] << ',';
    csv << "recovered,oracle,abs_err\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto idx = grid.unflatten(i);
        for (int a = 0; a < grid.dim; ++a) csv << idx[a] << ',';
        csv << io::format_double(recovered.values[i].real()) << ','
            << io::format_double(oracle.values[i].real()) << ','
            << io::format_double(std::abs(recovered.values[i] -
                                          oracle.values[i]))
            << '\n';
    }
    io::atomic_write_text(out, csv.str());
    double rel = rel_l2_error(recovered, oracle);
    std::printf("DtN recovery rel L2 error = %.6e (rows in %s)\n", rel,
                out.c_str());
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& report) {
    bool all_passed = true;
    if (suite == "acceptance" || suite == "all") {
        auto criteria = verify::acceptance_criteria();
        for (const auto& c : criteria) {
            std::printf("[%s] criterion %2d: %s (%.1fs)\n",
                        c.passed ? "PASS" : "FAIL", c.id, c.label.c_str(),
                        c.runtime_seconds);
            all_passed = all_passed && c.passed;
        }
        if (!report.empty())
            io::atomic_write_text(report, verify::criteria_to_json(criteria));
    } else {
        std::vector<verify::CheckReport> reports;
        if (suite == "backend") {
            reports = verify::run_backend_compare();
        } else if (suite == "bounds") {
            reports = verify::run_bound_suite();
        } else if (suite == "residual") {
            reports = verify::run_pde_residual();
        } else if (suite == "limits") {
            reports = verify::run_limit_study(2, {0.2, 0.1, 0.05, 0.02, 0.01});
            for (auto& r : verify::run_limit_study(3, {0.4, 0.45, 0.49}))
                reports.push_back(r);
            for (auto& r : verify::run_limit_study(4, {0.8, 0.9, 0.95}))
                reports.push_back(r);
        } else if (suite == "quick") {
            verify::BackendCompareConfig cfg;
            cfg.dims = {1};
            reports = verify::run_backend_compare(cfg);
            for (auto& r : verify::run_pde_residual()) reports.push_back(r);
        } else {
            throw std::invalid_argument(
                "--suite must be acceptance, backend, bounds, residual, "
                "limits, quick or all");
        }
        verify::print_summary(std::cout, reports);
        for (const auto& r : reports) all_passed = all_passed && r.passed;
        if (!report.empty())
            io::atomic_write_text(report, verify::reports_to_json(reports));
    }
    if (!report.empty()) std::printf("report written to %s\n", report.c_str());
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracwave: numerical solvers for the degenerate wave "
                 "extension problem of the fractional Laplacian"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FRACWAVE_VERSION_STRING);

    CommonOpts opts;
    try {
        apply_config(load_config_json(argc, argv), opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    // solve
    auto* solve = app.add_subcommand("solve", "evolve initial data to time t");
    add_common_options(solve, opts);
    std::string backend = "bessel", problem = "dirichlet";
    double t_solve = 1.0;
    solve->add_option("--backend", backend,
                      "bessel | subordination | kernel | all");
    solve->add_option("--problem", problem, "dirichlet | neumann | cauchy");
    solve->add_option("--t", t_solve, "evolution time");

    // symbol-table
    auto* symtab = app.add_subcommand(
        "symbol-table", "dump the symbol I_sigma(lambda, t) over a grid");
    double st_sigma = 0.5;
    std::string st_lambda = "0:10:0.5";
    std::vector<double> st_ts{1.0};
    std::string st_out = "symbol_table.csv";
    symtab->add_option("--sigma", st_sigma, "fractional order");
    symtab->add_option("--lambda", st_lambda, "lambda range lo:hi:step");
    symtab->add_option("--t", st_ts, "time values");
    symtab->add_option("--out", st_out, "output CSV path");

    // multiplier-dump
    auto* mdump = app.add_subcommand(
        "multiplier-dump", "dump the Dirichlet/Neumann multiplier profile");
    add_common_options(mdump, opts);
    double t_mdump = 1.0;
    std::string mdump_out = "multipliers.csv";
    mdump->add_option("--t", t_mdump, "evolution time");
    mdump->add_option("--out", mdump_out, "output CSV path");

    // kernel-eval
    auto* keval = app.add_subcommand(
        "kernel-eval", "evaluate a ball-kernel solution on a line of points");
    add_common_options(keval, opts);
    std::string keval_op = "low", keval_range = "-1:1:0.25";
    std::string keval_out = "kernel_eval.csv";
    std::vector<double> keval_at;
    double keval_t = 0.7, keval_gw = 0.6;
    keval->add_option("--op", keval_op,
                      "low | high | sphere-mean | descent | classical-d2");
    keval->add_option("--t", keval_t, "evolution time");
    keval->add_option("--x0", keval_range, "query line lo:hi:step on axis 0");
    keval->add_option("--at", keval_at, "fixed coordinates of the other axes");
    keval->add_option("--g-width", keval_gw, "Gaussian data width");
    keval->add_option("--out", keval_out, "output CSV path");

    // dtn
    auto* dtn = app.add_subcommand(
        "dtn", "recover the fractional Laplacian from the solver");
    add_common_options(dtn, opts);
    std::vector<double> dtn_ts;
    std::string dtn_out = "dtn_recovery.csv";
    dtn->add_option("--t-seq", dtn_ts, "decreasing extrapolation times");
    dtn->add_option("--out", dtn_out, "output CSV path");

    // verify
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string suite = "acceptance", report;
    ver->add_option("--suite", suite,
                    "acceptance | backend | bounds | residual | limits | "
                    "quick | all");
    ver->add_option("--report", report, "JSON report output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(opts, backend, problem, t_solve);
        if (symtab->parsed())
            return cmd_symbol_table(st_sigma, st_lambda, st_ts, st_out);
        if (mdump->parsed()) return cmd_multiplier_dump(opts, t_mdump, mdump_out);
        if (keval->parsed())
            return cmd_kernel_eval(opts, keval_op, keval_t, keval_range,
                                   keval_at, keval_gw, keval_out);
        if (dtn->parsed()) return cmd_dtn(opts, dtn_ts, dtn_out);
        if (ver->parsed()) return cmd_verify(suite, report);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
