// Runs the randomized property suites and prints one line per suite.
// Exit status 0 when every suite ran in full with no violation.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "pcent/properties.hpp"

int main(int argc, char** argv) {
    pcent::PropertyConfig cfg;
    CLI::App app{"property suites"};
    app.add_option("--seed", cfg.seed);
    app.add_option("--openset-cases", cfg.openset_cases);
    app.add_option("--cover-cases", cfg.cover_cases);
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    using clock = std::chrono::steady_clock;
    using Fn = pcent::SuiteReport (*)(const pcent::PropertyConfig&);
    for (Fn suite : {Fn(pcent::check_openset_algebra), Fn(pcent::check_aleph_bounds), Fn(pcent::check_cover_subadditivity),
                     Fn(pcent::check_count_submultiplicativity)}) {
        const auto t0 = clock::now();
        const pcent::SuiteReport r = suite(cfg);
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::printf("%s: %s (%zu cases, %zu violations, %.1f s)\n", r.name.c_str(), r.ok() ? "pass" : "FAIL", r.cases,
                    r.violations, secs);
        if (!r.witness.empty()) std::printf("  first violation: %s\n", r.witness.c_str());
        if (!r.note.empty()) std::printf("  note: %s\n", r.note.c_str());
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}
