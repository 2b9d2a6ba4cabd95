// Golden-file checks: the CLI must produce byte-identical numbers to the
// same computation done through direct library calls, and honor the
// documented exit codes.

#include "fracwave/bessel.hpp"
#include "fracwave/io.hpp"
#include "fracwave/oscillatory.hpp"
#include "fracwave/testdata.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fracwave;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
        ++failures;
    } else {
        std::printf("ok: %s\n", what.c_str());
    }
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(FRACWAVE_CLI_PATH) + " " + args +
                      " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (!cells.empty()) rows.push_back(cells);
    }
    return rows;
}

} // namespace

int main() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fracwave_cli_golden";
    fs::remove_all(dir);
    fs::create_directories(dir);

    // 1. symbol-table output equals direct symbol_I values, digit for digit.
    {
        std::string out = (dir / "sym.csv").string();
        int code = run_cli("symbol-table --sigma 0.35 --lambda 0:4:1 --t 0.8 "
                           "--out " + out);
        expect(code == 0, "symbol-table exits 0");
        auto rows = read_csv(out);
        expect(rows.size() == 6, "symbol-table row count (header + 5)");
        FractionalOrder sigma(0.35);
        bool all_equal = true;
        for (std::size_t r = 1; r < rows.size(); ++r) {
            double lambda = std::stod(rows[r][1]);
            auto v = osc::symbol_I(sigma, lambda, 0.8);
            all_equal = all_equal &&
                        rows[r][3] == io::format_double(v.value.real()) &&
                        rows[r][4] == io::format_double(v.value.imag());
        }
        expect(all_equal, "symbol-table values match library bytes");
    }

    // 2. solve output equals a direct solve_bessel on the same data.
    {
        int code = run_cli("solve --sigma 0.6 --d 1 --n 32 --box 16 "
                           "--backend bessel --problem dirichlet --t 0.9 "
                           "--out-dir " + dir.string());
        expect(code == 0, "solve exits 0");
        TorusGrid grid(1, 32, 16.0);
        GaussianSum::Bump bump;
        bump.center = {8.0};
        bump.width = 1.6;
        BandSpec band{0.15 * grid.nyquist_radius(),
                      0.6 * grid.nyquist_radius()};
        Field f = make_test_data(grid,
                                 std::span<const GaussianSum::Bump>(&bump, 1),
                                 band)
                      .field;
        auto u = solve_bessel(f, std::nullopt, FractionalOrder(0.6), 0.9);
        Field from_csv =
            io::read_field_csv((dir / "solution_bessel.csv").string(), grid);
        bool identical = true;
        for (std::size_t i = 0; i < grid.size(); ++i)
            identical = identical && from_csv.values[i] == u.field.values[i];
        expect(identical, "solve CSV equals direct library solve");
    }

    // 3. config file values are applied and flags override them.
    {
        std::string cfg = (dir / "cfg.json").string();
        io::atomic_write_text(cfg,
                              "{\"sigma\": 0.6, \"d\": 1, \"n\": 32, "
                              "\"box_length\": 16.0}\n");
        fs::path outdir = dir / "cfged";
        int code = run_cli("solve --config " + cfg + " --t 0.9 --out-dir " +
                           outdir.string());
        expect(code == 0, "solve with config exits 0");
        std::ifstream in(outdir / "solution_bessel.json");
        std::stringstream ss;
        ss << in.rdbuf();
        expect(ss.str().find("\"sigma\": 0.6") != std::string::npos,
               "manifest echoes config sigma");

        // flag overrides config
        fs::path outdir2 = dir / "cfged2";
        run_cli("solve --config " + cfg + " --sigma 0.25 --t 0.9 --out-dir " +
                outdir2.string());
        std::ifstream in2(outdir2 / "solution_bessel.json");
        std::stringstream ss2;
        ss2 << in2.rdbuf();
        expect(ss2.str().find("\"sigma\": 0.25") != std::string::npos,
               "flag overrides config sigma");
    }

    // 4. exit codes: validation failures exit 2.
    expect(run_cli("solve --sigma 1.0 --t 1.0") == 2,
           "sigma = 1 is a validation failure (exit 2)");
    expect(run_cli("solve --sigma 0.5 --t -1.0") == 2,
           "negative t is a validation failure (exit 2)");
    expect(run_cli("solve --sigma 0.5 --t 1.0 --backend kernel "
                   "--problem dirichlet") == 2,
           "kernel Dirichlet solve rejected (exit 2)");

    // 5. verify quick suite passes.
    expect(run_cli("verify --suite quick") == 0, "verify --suite quick");

    fs::remove_all(dir);
    std::printf(failures == 0 ? "all golden checks passed\n"
                              : "%d golden check(s) failed\n",
                failures);
    return failures == 0 ? 0 : 1;
}
