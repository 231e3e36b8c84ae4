// Acceptance gate: runs the full verification suite and prints one line per
// criterion. Exit 0 iff everything passed.
#include <cstdio>

#include "armijo/verification.hpp"

int main() {
    const armijo::SuiteReport report = armijo::run_verification_suite();
    int passed = 0;
    for (const auto& c : report.criteria) {
        std::printf("[%s] %s — %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        if (c.pass) ++passed;
    }
    std::printf("%d/%zu criteria passed\n", passed, report.criteria.size());
    return report.all_pass ? 0 : 1;
}
