#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcent/estimators.hpp"

namespace pcent {

enum class Method { misiurewicz_szlenk, bowen_separated, bowen_spanning, cover };
enum class Estimator { last_ratio, slope_fit, fekete_min };

std::string to_string(Method m);
std::string to_string(Estimator e);
/// Accepts "last-ratio", "slope-fit", "fekete-min".
std::optional<Estimator> parse_estimator(std::string_view text);

struct SeriesRecord {
    int n = 0;
    double value = 0;              // c_n, aleph, s_n or r_n
    std::optional<double> aux;     // eps for Bowen records
    std::string flag;              // empty when nothing to report
};

/// Per-n records and the extrapolated entropy.
struct EntropySeries {
    Method method = Method::misiurewicz_szlenk;
    std::vector<SeriesRecord> records;
    double estimate = 0;
    Estimator estimator = Estimator::slope_fit;
    bool truncated = false;
    std::string note;

    std::vector<LogRecord> log_records() const;
};

/// Applies an estimator to (n, log value) records.
double estimate_entropy(const std::vector<LogRecord>& values, Estimator estimator, double window_fraction = 0.5);

}  // namespace pcent
