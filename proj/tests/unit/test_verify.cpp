#include <doctest.h>

#include "fracwave/verify.hpp"

#include <cmath>
#include <sstream>

using namespace fracwave;
using namespace fracwave::verify;

TEST_CASE("run_check enforces pass == (metric <= tolerance)") {
    CheckReport ok = run_check("x", "{}", 1.0, [] { return 0.5; });
    CHECK(ok.passed);
    CheckReport bad = run_check("x", "{}", 1.0, [] { return 2.0; });
    CHECK(!bad.passed);
    CheckReport nan = run_check("x", "{}", 1.0, [] { return std::nan(""); });
    CHECK(!nan.passed);
    CHECK(ok.runtime_seconds >= 0.0);
}

TEST_CASE("limit study reports are monotone-encoded") {
    auto reports = run_limit_study(3, {0.4, 0.45, 0.49});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].name == "limit_study/monotone_decrease");
    CHECK(reports[0].passed);
    CHECK(reports[1].name == "limit_study/final_distance");
    CHECK(reports[1].passed);
    CHECK_THROWS_AS(run_limit_study(3, {0.4}), std::invalid_argument);
}

TEST_CASE("backend compare on a slim config passes") {
    BackendCompareConfig cfg;
    cfg.dims = {1};
    cfg.sigmas = {0.5};
    cfg.times = {0.5};
    auto reports = run_backend_compare(cfg);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("reports are reproducible: same seed, same metrics") {
    BackendCompareConfig cfg;
    cfg.dims = {1};
    cfg.sigmas = {0.25};
    cfg.times = {0.3};
    auto a = run_backend_compare(cfg);
    auto b = run_backend_compare(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a[i].metric - b[i].metric) <= 1e-14);
}

TEST_CASE("JSON serialization is parseable and carries the seed") {
    auto reports = run_limit_study(3, {0.45, 0.49});
    std::string j = reports_to_json(reports, 42);
    CHECK(j.find("\"seed\": 42") != std::string::npos);
    CHECK(j.find("limit_study/monotone_decrease") != std::string::npos);

    std::ostringstream table;
    print_summary(table, reports);
    CHECK(table.str().find("PASS") != std::string::npos);
}
