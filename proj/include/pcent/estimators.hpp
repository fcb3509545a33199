#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcent/error.hpp"

namespace pcent {

/// One sample of a growth sequence: n and log of the counted quantity.
struct LogRecord {
    int n;
    double log_value;
};

struct SequenceFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // root mean square
    int n_lo = 0;
    int n_hi = 0;
};

/// Thrown by fekete_estimate when a_{n+m} > a_n + a_m for recorded n, m.
class SubadditivityViolation : public Error {
public:
    SubadditivityViolation(int n, int m, double excess);
    int n() const { return n_; }
    int m() const { return m_; }
    double excess() const { return excess_; }

private:
    int n_;
    int m_;
    double excess_;
};

/// First pair (n, m) with a_{n+m} > a_n + a_m + slack, if any.
std::optional<std::pair<int, int>> find_subadditivity_violation(std::span<const LogRecord> values, double slack = 1e-9);

/// min over n of a_n / n. For a subadditive sequence this bounds the limit from
/// above and converges to it (Fekete).
double fekete_estimate(std::span<const LogRecord> values);

/// Least-squares line through the records with n >= n_hi - window_fraction * (n_hi - n_lo).
/// Needs at least 4 records.
SequenceFit slope_fit(std::span<const LogRecord> values, double window_fraction = 0.5);

/// Least-squares line through all records.
SequenceFit least_squares(std::span<const LogRecord> values);

}  // namespace pcent
