#include "pcent/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

namespace pcent {

SubadditivityViolation::SubadditivityViolation(int n, int m, double excess)
    : Error("subadditivity violated at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
            " (excess " + std::to_string(excess) + ")"),
      n_(n),
      m_(m),
      excess_(excess) {}

std::optional<std::pair<int, int>> find_subadditivity_violation(std::span<const LogRecord> values, double slack) {
    std::unordered_map<int, double> by_n;
    for (const LogRecord& r : values) by_n[r.n] = r.log_value;
    for (const LogRecord& a : values) {
        for (const LogRecord& b : values) {
            if (b.n < a.n) continue;
            auto it = by_n.find(a.n + b.n);
            if (it == by_n.end()) continue;
            if (it->second > a.log_value + b.log_value + slack) return std::make_pair(a.n, b.n);
        }
    }
    return std::nullopt;
}

double fekete_estimate(std::span<const LogRecord> values) {
    if (values.size() < 2) throw std::invalid_argument("fekete_estimate needs at least 2 records");
    if (auto v = find_subadditivity_violation(values)) {
        double a = 0, b = 0, c = 0;
        for (const LogRecord& r : values) {
            if (r.n == v->first) a = r.log_value;
            if (r.n == v->second) b = r.log_value;
            if (r.n == v->first + v->second) c = r.log_value;
        }
        throw SubadditivityViolation(v->first, v->second, c - a - b);
    }
    double best = std::numeric_limits<double>::infinity();
    for (const LogRecord& r : values) {
        if (r.n <= 0) throw std::invalid_argument("fekete_estimate needs n >= 1");
        best = std::min(best, r.log_value / r.n);
    }
    return best;
}

SequenceFit slope_fit(std::span<const LogRecord> values, double window_fraction) {
    if (!(window_fraction > 0 && window_fraction <= 1)) throw std::invalid_argument("window_fraction must be in (0, 1]");
    if (values.size() < 4) throw std::invalid_argument("slope_fit needs at least 4 records");
    int n_min = values.front().n, n_max = values.front().n;
    for (const LogRecord& r : values) {
        n_min = std::min(n_min, r.n);
        n_max = std::max(n_max, r.n);
    }
    const double cut = n_max - window_fraction * (n_max - n_min);
    std::vector<LogRecord> window;
    for (const LogRecord& r : values) {
        if (r.n >= cut - 1e-12) window.push_back(r);
    }
    if (window.size() < 2) throw std::invalid_argument("slope_fit window holds fewer than 2 records");
    return least_squares(window);
}

SequenceFit least_squares(std::span<const LogRecord> window) {
    if (window.size() < 2) throw std::invalid_argument("least squares needs at least 2 records");
    double mx = 0, my = 0;
    for (const LogRecord& r : window) {
        mx += r.n;
        my += r.log_value;
    }
    mx /= static_cast<double>(window.size());
    my /= static_cast<double>(window.size());
    double sxx = 0, sxy = 0;
    for (const LogRecord& r : window) {
        sxx += (r.n - mx) * (r.n - mx);
        sxy += (r.n - mx) * (r.log_value - my);
    }
    if (sxx == 0) throw std::invalid_argument("least squares needs two distinct n");

    SequenceFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    fit.n_lo = window.front().n;
    fit.n_hi = window.front().n;
    for (const LogRecord& r : window) {
        double e = r.log_value - (fit.intercept + fit.slope * r.n);
        ss += e * e;
        fit.n_lo = std::min(fit.n_lo, r.n);
        fit.n_hi = std::max(fit.n_hi, r.n);
    }
    fit.residual = std::sqrt(ss / static_cast<double>(window.size()));
    return fit;
}

}  // namespace pcent
