// Acceptance suite: one line per criterion, JSON report on request.
// Exit code 0 iff every criterion passes.

#include "fracwave/io.hpp"
#include "fracwave/verify.hpp"

#include <cstdio>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    std::string report_path;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--report") == 0 && i + 1 < argc)
            report_path = argv[++i];
    }

    auto criteria = fracwave::verify::acceptance_criteria();

    int failures = 0;
    for (const auto& c : criteria) {
        double worst_margin = 0.0;
        const fracwave::verify::CheckReport* worst = nullptr;
        for (const auto& r : c.checks) {
            double margin = r.tolerance > 0.0 ? r.metric / r.tolerance
                                              : (r.metric > 0.0 ? 1e300 : 0.0);
            if (!worst || margin > worst_margin) {
                worst = &r;
                worst_margin = margin;
            }
        }
        std::printf("[%s] criterion %2d: %-42s (%zu checks, worst %s: "
                    "metric=%.3e tol=%.1e, %.1fs)\n",
                    c.passed ? "PASS" : "FAIL", c.id, c.label.c_str(),
                    c.checks.size(), worst ? worst->name.c_str() : "-",
                    worst ? worst->metric : 0.0, worst ? worst->tolerance : 0.0,
                    c.runtime_seconds);
        if (!c.passed) {
            ++failures;
            for (const auto& r : c.checks) {
                if (!r.passed)
                    std::printf("       FAILED %s %s metric=%.6e tol=%.1e\n",
                                r.name.c_str(), r.params.c_str(), r.metric,
                                r.tolerance);
            }
        }
    }

    if (!report_path.empty()) {
        fracwave::io::atomic_write_text(
            report_path, fracwave::verify::criteria_to_json(criteria));
        std::printf("report written to %s\n", report_path.c_str());
    }

    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
