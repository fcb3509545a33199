#include <cmath>

#include "pcent/series.hpp"

namespace pcent {

std::string to_string(Method m) {
    switch (m) {
        case Method::misiurewicz_szlenk: return "ms";
        case Method::bowen_separated: return "bowen-separated";
        case Method::bowen_spanning: return "bowen-spanning";
        case Method::cover: return "cover";
    }
    return "?";
}

std::string to_string(Estimator e) {
    switch (e) {
        case Estimator::last_ratio: return "last-ratio";
        case Estimator::slope_fit: return "slope-fit";
        case Estimator::fekete_min: return "fekete-min";
    }
    return "?";
}

std::optional<Estimator> parse_estimator(std::string_view text) {
    if (text == "last-ratio") return Estimator::last_ratio;
    if (text == "slope-fit") return Estimator::slope_fit;
    if (text == "fekete-min") return Estimator::fekete_min;
    return std::nullopt;
}

std::vector<LogRecord> EntropySeries::log_records() const {
    std::vector<LogRecord> out;
    out.reserve(records.size());
    for (const SeriesRecord& r : records) out.push_back({r.n, std::log(r.value)});
    return out;
}

double estimate_entropy(const std::vector<LogRecord>& values, Estimator estimator, double window_fraction) {
    switch (estimator) {
        case Estimator::last_ratio: {
            if (values.empty()) throw std::invalid_argument("no records to estimate from");
            const LogRecord* last = &values.front();
            for (const LogRecord& r : values) {
                if (r.n > last->n) last = &r;
            }
            return last->log_value / last->n;
        }
        case Estimator::slope_fit: return slope_fit(values, window_fraction).slope;
        case Estimator::fekete_min: return fekete_estimate(values);
    }
    return 0;
}

}  // namespace pcent
