#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcent/pcmap.hpp"
#include "pcent/symbolic.hpp"
#include "pcent/transforms.hpp"

namespace pcent {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string property;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // witness on failure, reason on skip
};

struct VerifyConfig {
    int n_max = 10;
    std::optional<int> power_k;
    std::optional<PlHomeo> phi;
    int cover_n_max = 8;
    int bowen_n_max = 8;
    int bowen_grid = 2049;
    std::vector<double> bowen_eps = {0.05, 0.02};
    SymbolicOptions symbolic;
};

/// Runs the invariant checks that apply to the map. A check cut short by the
/// resource cap is skipped, not failed.
std::vector<CheckResult> verify_map(const PcMap& map, const VerifyConfig& config);

/// "f³", "Δⁿ" and the like.
std::string superscript(int k);

}  // namespace pcent
