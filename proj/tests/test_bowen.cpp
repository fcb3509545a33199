#include <doctest.h>

#include <cmath>
#include <random>

#include "pcent/bowen.hpp"
#include "pcent/catalog.hpp"
#include "pcent/error.hpp"

using namespace pcent;

namespace {

PcMap cat(const char* name) { return catalog_get(name).map; }

const RegionSet X(Interval::closed(0, 1));

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) v.push_back(n);
    return v;
}

}  // namespace

TEST_CASE("rho_n") {
    const PcMap tent = cat("tent");
    CHECK(rho_n(tent, 0.3, 0.3, 5) == 0);
    CHECK(rho_n(tent, 0.1, 0.2, 1) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(rho_n(tent, 0.1, 0.2, 2) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK_THROWS(rho_n(tent, 0.1, 0.2, 0));
}

TEST_CASE("rho_n is a metric and grows with n") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (const char* name : {"tent", "mod3", "anzie", "iet2-golden"}) {
        const PcMap m = cat(name);
        for (int k = 0; k < 300; ++k) {
            const double x = u(rng), y = u(rng), z = u(rng);
            const int n = 1 + k % 8;
            const double xy = rho_n(m, x, y, n);
            CHECK(xy == rho_n(m, y, x, n));
            CHECK(xy <= rho_n(m, x, z, n) + rho_n(m, z, y, n) + 1e-12);
            CHECK(rho_n(m, x, x, n) == 0);
            CHECK(std::abs(x - y) <= xy);
            CHECK(xy <= rho_n(m, x, y, n + 1));
        }
    }
}

TEST_CASE("sample_region") {
    SampleSet t = sample_region(cat("tent"), X, 5, 1);
    CHECK(t.nudged + t.dropped == 1);
    for (double x : t.points) CHECK(x != 0.5);
    SampleSet id = sample_region(cat("identity"), X, 11, 3);
    REQUIRE(id.points.size() == 11);
    for (int k = 0; k <= 10; ++k) CHECK(id.points[static_cast<std::size_t>(k)] == doctest::Approx(k / 10.0).epsilon(1e-15));
    CHECK(id.nudged == 0);
    CHECK_THROWS_AS(sample_region(cat("tent"), RegionSet(Interval::closed(0.5, 0.5)), 10, 1), ValidationError);

    SampleSet big = sample_region(cat("tent"), X, 4097, 6);
    CHECK(big.points.size() == 4097);
    CHECK(big.nudged == 63);  // the dyadic grid meets every point of Δ⁶
    for (double x : big.points) CHECK(cat("tent").orbit_avoids_delta(x, 6));
    for (std::size_t k = 1; k < big.points.size(); ++k) CHECK(big.points[k] - big.points[k - 1] <= big.density);
}

TEST_CASE("separated and spanning on the identity") {
    const PcMap id = cat("identity");
    SampleSet s = sample_region(id, X, 1001, 1);
    // Packing ⌊1/ε⌋ + 1 points and covering with ⌈1/(2ε − δ)⌉ balls.
    CHECK(max_separated(id, s, 1, 0.5) == 3);
    CHECK(min_spanning(id, s, 1, 0.5) == 2);
    CHECK(max_separated(id, s, 1, 0.0999) == 11);
    CHECK(max_separated(id, s, 1, 1.5) == 1);
    CHECK(min_spanning(id, s, 1, 1.5) == 1);
    CHECK(max_separated(cat("tent"), sample_region(cat("tent"), X, 257, 4), 4, 2.0) == 1);
    CHECK_THROWS(max_separated(id, s, 2, 0.5));  // beyond the horizon
    CHECK_THROWS(min_spanning(id, s, 1, 0.0));
}

TEST_CASE("separated and spanning on the tent") {
    const PcMap tent = cat("tent");
    SampleSet s = sample_region(tent, X, 4097, 6);
    BowenOptions serial;
    serial.parallel = false;
    CHECK(max_separated(tent, s, 6, 0.05, serial) == 529);
    CHECK(min_spanning(tent, s, 6, 0.05, serial) == 529);
    CHECK(max_separated(tent, s, 6, 0.025, serial) == 981);
    CHECK(min_spanning(tent, s, 6, 0.025, serial) == 692);
    // r(ε) ≤ s(ε) ≤ r(ε/2)
    for (int n = 1; n <= 6; ++n) {
        for (double eps : {0.1, 0.05, 0.02}) {
            const auto r = min_spanning(tent, s, n, eps), sep = max_separated(tent, s, n, eps);
            CHECK(r <= sep);
            CHECK(sep <= min_spanning(tent, s, n, eps / 2));
        }
    }
}

TEST_CASE("counts fall as eps grows") {
    const PcMap m = cat("anzie");
    SampleSet s = sample_region(m, X, 2049, 5);
    for (int n = 1; n <= 5; ++n) {
        std::size_t prev_s = SIZE_MAX, prev_r = SIZE_MAX;
        for (double eps : {0.01, 0.02, 0.05, 0.1, 0.3}) {
            const auto sep = max_separated(m, s, n, eps), r = min_spanning(m, s, n, eps);
            CHECK(sep <= prev_s);
            CHECK(r <= prev_r);
            prev_s = sep;
            prev_r = r;
        }
    }
}

TEST_CASE("bowen entropy of the tent") {
    BowenResult r = bowen_entropy(cat("tent"), X, range(4, 12), {0.05, 0.02, 0.01}, 8193);
    const double band = 0.15 * std::log(2.0);
    CHECK(std::abs(r.separated.estimate - std::log(2.0)) <= band);
    CHECK(std::abs(r.spanning.estimate - std::log(2.0)) <= band);
    CHECK(r.sandwich_ok);
    CHECK(r.table.size() == 3);
    CHECK(r.cells.size() == 27);
}

TEST_CASE("bowen entropy of zero-entropy maps") {
    BowenResult id = bowen_entropy(cat("identity"), X, range(4, 12), {0.05, 0.02, 0.01}, 2049);
    CHECK(std::abs(id.separated.estimate) <= 0.05);
    CHECK(std::abs(id.spanning.estimate) <= 0.05);
    BowenResult pw = bowen_entropy(cat("pw-contraction"), X, range(4, 12), {0.05, 0.02, 0.01}, 4097);
    CHECK(pw.separated.estimate <= 0.1);
    CHECK(pw.spanning.estimate <= 0.1);
    CHECK(pw.sandwich_ok);
}

TEST_CASE("bowen entropy on an invariant region") {
    BowenResult r = bowen_entropy(cat("anzie"), parse_region("[0.7, 1]"), range(4, 12), {0.05, 0.02, 0.01, 0.005}, 8193);
    CHECK(r.separated.estimate >= std::log(2.0) - 0.1);
    CHECK(r.sandwich_ok);
    for (double x : r.sample.points) CHECK(x >= 0.7);
}

TEST_CASE("bowen entropy through a change of coordinates") {
    const PcMap tent = cat("tent");
    BowenOptions opt;
    const std::vector<std::pair<double, double>> nodes{{0, 0}, {0.4, 0.6}, {1, 1}};
    opt.chart = [nodes](double x) {
        return x <= nodes[1].first ? x * nodes[1].second / nodes[1].first
                                   : nodes[1].second + (x - nodes[1].first) * (1 - nodes[1].second) / (1 - nodes[1].first);
    };
    BowenResult plain = bowen_entropy(tent, X, range(4, 12), {0.05, 0.02, 0.01}, 8193);
    BowenResult charted = bowen_entropy(tent, X, range(4, 12), {0.05, 0.02, 0.01}, 8193, opt);
    const double band = 0.15 * std::log(2.0);
    CHECK(std::abs(plain.separated.estimate - charted.separated.estimate) < band);
    CHECK(std::abs(plain.spanning.estimate - charted.spanning.estimate) < band);
    CHECK(charted.sandwich_ok);
}

TEST_CASE("bowen entropy argument checks") {
    const PcMap tent = cat("tent");
    CHECK_THROWS(bowen_entropy(tent, X, {4, 3}, {0.05}, 257));
    CHECK_THROWS(bowen_entropy(tent, X, {4, 5}, {0.02, 0.05}, 257));
    CHECK_THROWS(bowen_entropy(tent, X, {}, {0.05}, 257));
}

TEST_CASE("serial and parallel bowen agree") {
    BowenOptions serial;
    serial.parallel = false;
    const PcMap m = cat("lorenz-full");
    BowenResult a = bowen_entropy(m, X, range(3, 8), {0.05, 0.02}, 2049, serial);
    BowenResult b = bowen_entropy(m, X, range(3, 8), {0.05, 0.02}, 2049);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].separated == b.cells[i].separated);
        CHECK(a.cells[i].spanning == b.cells[i].spanning);
        CHECK(a.cells[i].spanning_half == b.cells[i].spanning_half);
    }
    CHECK(a.separated.estimate == b.separated.estimate);
}
