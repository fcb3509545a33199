#include <doctest.h>

#include <cmath>
#include <vector>

#include "pcent/estimators.hpp"
#include "pcent/series.hpp"

using namespace pcent;

namespace {

template <class F>
std::vector<LogRecord> records(int n_lo, int n_hi, F f) {
    std::vector<LogRecord> v;
    for (int n = n_lo; n <= n_hi; ++n) v.push_back({n, f(n)});
    return v;
}

// Ordinary least-squares slope, written out.
double ols_slope(const std::vector<LogRecord>& v) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : v) {
        sx += r.n;
        sy += r.log_value;
        sxx += double(r.n) * r.n;
        sxy += r.n * r.log_value;
    }
    const double m = static_cast<double>(v.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TEST_CASE("fekete on linear sequences") {
    auto lin = records(1, 12, [](int n) { return n * std::log(2.0); });
    CHECK(std::abs(fekete_estimate(lin) - std::log(2.0)) <= 1e-9);
}

TEST_CASE("fekete on a rotation count") {
    auto rot = records(1, 20, [](int n) { return std::log(n + 1.0); });
    CHECK(fekete_estimate(rot) == doctest::Approx(std::log(21.0) / 20).epsilon(1e-15));
    auto shorter = records(1, 10, [](int n) { return std::log(n + 1.0); });
    CHECK(fekete_estimate(shorter) > fekete_estimate(rot));
}

TEST_CASE("fekete on a mixed sequence") {
    auto mixed = records(1, 16, [](int n) { return std::log(std::pow(2.0, n) + n); });
    const double v = fekete_estimate(mixed);
    CHECK(v >= std::log(2.0));
    CHECK(v <= std::log(2.0) + std::log(1 + 16 / std::pow(2.0, 16)) / 16 + 1e-15);
}

TEST_CASE("fekete rejects superadditive input with a witness") {
    auto bad = records(1, 6, [](int n) { return double(n * n); });
    auto w = find_subadditivity_violation(bad);
    REQUIRE(w);
    CHECK(w->first + w->second <= 6);
    CHECK_THROWS_AS(fekete_estimate(bad), SubadditivityViolation);
}

TEST_CASE("slope fit on linear data") {
    auto lin = records(1, 20, [](int n) { return 0.3 * n + 1.7; });
    SequenceFit f = slope_fit(lin);
    CHECK(f.slope == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f.residual <= 1e-12);
    CHECK(f.n_lo >= 10);
    CHECK(f.n_hi == 20);
}

TEST_CASE("slope fit on log(n+1) matches closed-form least squares") {
    auto rot = records(1, 30, [](int n) { return std::log(n + 1.0); });
    SequenceFit f = slope_fit(rot, 0.5);
    std::vector<LogRecord> top(rot.begin() + 15, rot.end());  // n = 16..30
    CHECK(f.slope == doctest::Approx(ols_slope(top)).epsilon(1e-12));
    CHECK(f.slope == doctest::Approx(0.0425070).epsilon(1e-5));
}

TEST_CASE("slope fit on log(2^n + n)") {
    auto mixed = records(1, 30, [](int n) { return std::log(std::pow(2.0, n) + n); });
    CHECK(std::abs(slope_fit(mixed).slope - std::log(2.0)) <= 1e-3);
}

TEST_CASE("slope fit preconditions") {
    auto three = records(1, 3, [](int n) { return double(n); });
    CHECK_THROWS(slope_fit(three));
    auto many = records(1, 10, [](int n) { return double(n); });
    CHECK_THROWS(slope_fit(many, 0.0));
    CHECK_THROWS(slope_fit(many, 1.5));
}

TEST_CASE("estimator names") {
    CHECK(parse_estimator("slope-fit") == Estimator::slope_fit);
    CHECK(parse_estimator("fekete-min") == Estimator::fekete_min);
    CHECK(parse_estimator("last-ratio") == Estimator::last_ratio);
    CHECK_FALSE(parse_estimator("median"));
    auto lin = records(1, 8, [](int n) { return n * std::log(3.0); });
    for (Estimator e : {Estimator::slope_fit, Estimator::fekete_min, Estimator::last_ratio}) {
        CHECK(estimate_entropy(lin, e) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    }
}
