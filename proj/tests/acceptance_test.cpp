// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qasl/selftest.hpp"

int main(int argc, char** argv) {
    unsigned long seed = 20240811ul;
    if (argc > 1) seed = std::strtoul(argv[1], nullptr, 10);

    auto results = qasl::selftest::run_all(seed);
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL",
                    r.number, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
    }
    bool ok = qasl::selftest::all_passed(results);
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return ok ? 0 : 1;
}
