// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <iostream>

#include "syzcurve/reproduce.hpp"

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    auto start = std::chrono::steady_clock::now();
    auto results = syz::run_reproduction(filter);
    bool all = true;
    int n = 0;
    for (const syz::CheckResult& r : results) {
        ++n;
        all = all && r.pass;
        std::cout << "criterion " << n << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " — "
                  << r.detail << "\n"
                  << std::flush;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << n << " criteria, "
              << secs.count() << "s)\n";
    return all ? 0 : 1;
}
