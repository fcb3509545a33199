#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pcent {

/// Outcome of one randomized or exhaustive property suite.
struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::string witness;   // first violation
    std::string note;
    bool complete = true;  // false when a cap cut the planned range short

    bool ok() const { return complete && violations == 0; }
};

struct PropertyConfig {
    std::uint64_t seed = 20240601;
    std::size_t openset_cases = 10'000;
    std::size_t cover_cases = 1'000;
    int subadditivity_n = 6;     // n, k <= this
    int submultiplicative_sum = 12;  // n + m <= this
    /// Δⁿ cap for the submultiplicativity suite; mod5 needs 5^11 points.
    std::size_t count_cap = 64'000'000;
};

/// OpenSet intersection, union and point removal against membership on a dense grid.
SuiteReport check_openset_algebra(const PropertyConfig& cfg = {});

/// Monotonicity under refinement and inclusion, the product bound and the
/// pullback bound for minimal subcover cardinality on random interval covers.
SuiteReport check_aleph_bounds(const PropertyConfig& cfg = {});

/// log ℵ(C^{n+k}) <= log ℵ(Cⁿ) + log ℵ(Cᵏ) on the tent for several covers.
SuiteReport check_cover_subadditivity(const PropertyConfig& cfg = {});

/// c_{n+m} <= c_n c_m for every catalog map.
SuiteReport check_count_submultiplicativity(const PropertyConfig& cfg = {});

std::vector<SuiteReport> run_property_suites(const PropertyConfig& cfg = {});

}  // namespace pcent
