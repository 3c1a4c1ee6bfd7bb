// Acceptance suite: runs the bundled verification sweep with its default
// configuration and prints one pass/fail line per criterion. Exits 0 only
// when every criterion passes.

#include <cstdio>
#include <iostream>

#include "satake/jobs.hpp"

int main() {
    std::vector<satake::CriterionResult> results;
    try {
        results = satake::run_acceptance_suite(satake::default_sweep_config(), &std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    bool all = true;
    for (const auto& c : results) {
        std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", c.pass ? "PASS" : "FAIL", c.index,
                    c.name.c_str(), c.detail.c_str(), c.seconds);
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: CRITERIA FAILED");
    return all ? 0 : 1;
}
