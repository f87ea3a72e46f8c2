// Acceptance gate: runs every criterion of the verification suite and
// prints one line per criterion. Exits nonzero if any criterion fails.
#include <cstdio>

#include "clif/report.hpp"

int main() {
    int failures = 0;
    for (const clif::Criterion& c : clif::run_criteria()) {
        bool ok = c.passed();
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s", ok ? "PASS" : "FAIL", c.number, c.title.c_str());
        if (int d = c.derived_count())
            std::printf("  (%d derived entr%s; see report payloads)", d, d == 1 ? "y" : "ies");
        std::printf("\n");
        for (const clif::ReportEntry& e : c.entries)
            if (e.status == "fail") std::printf("       failed entry: %s\n", e.id.c_str());
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
