#include <doctest.h>

#include <cmath>
#include <random>

#include "pcent/catalog.hpp"
#include "pcent/error.hpp"
#include "pcent/pcmap.hpp"

using namespace pcent;

namespace {

const char* kTent =
    "domain = [0, 1]\n"
    "piece (0, 0.5): 2*x inc\n"
    "piece (0.5, 1): 2 - 2*x dec\n";

}  // namespace

TEST_CASE("parse tent and identity") {
    PcMap tent = parse_map(kTent);
    CHECK(tent.piece_count() == 2);
    REQUIRE(tent.delta().size() == 1);
    CHECK(tent.delta()[0] == 0.5);
    PcMap id = parse_map("domain = [0, 1]\npiece (0, 1): x inc\n");
    CHECK(id.delta().empty());
}

TEST_CASE("malformed maps are rejected") {
    CHECK_THROWS_WITH_AS(parse_map("domain = [0, 1]\npiece (0, 0.6): x inc\npiece (0.5, 1): x inc\n"),
                         doctest::Contains("pieces overlap"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_map("domain = [0, 1]\npiece (0, 0.4): x inc\npiece (0.5, 1): x inc\n"),
                         doctest::Contains("gap between pieces"), ValidationError);
    // Image leaves the domain.
    CHECK_THROWS_AS(parse_map("domain = [0, 1]\npiece (0, 1): 2*x inc\n"), ValidationError);
    // Declared direction contradicts the expression.
    CHECK_THROWS_AS(parse_map("domain = [0, 1]\npiece (0, 1): x dec\n"), ValidationError);
    // Not monotone on the piece.
    CHECK_THROWS_AS(parse_map("domain = [0, 1]\npiece (0, 1): 4*x*(1 - x) inc\n"), ValidationError);
    CHECK_THROWS_AS(parse_map("domain = [0, 1]\npiece (0, 1): x\n"), ParseError);
    CHECK_THROWS_AS(parse_map("piece (0, 1): x inc\n"), ParseError);
    try {
        parse_map("domain = [0, 1]\npiece (0, 1): x + inc\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("evaluate and orbits") {
    PcMap tent = parse_map(kTent);
    PcMap id = catalog_get("identity").map;
    PcMap t2 = catalog_get("mod2").map;
    CHECK(tent.evaluate(0.25) == 0.5);
    CHECK(id.evaluate(0.7) == 0.7);
    CHECK(t2.evaluate(0.75) == 0.5);
    auto o = tent.orbit(0.25, 3);
    REQUIRE(o.size() == 3);
    CHECK(o[0] == 0.25);
    CHECK(o[1] == 0.5);
    CHECK(o[2] == 1.0);
    auto p = t2.orbit(1.0 / 3, 4);
    CHECK(p[0] == doctest::Approx(1.0 / 3));
    CHECK(p[1] == doctest::Approx(2.0 / 3));
    CHECK(p[2] == doctest::Approx(1.0 / 3));
    CHECK(p[3] == doctest::Approx(2.0 / 3));
    for (double v : id.orbit(0.4, 5)) CHECK(v == 0.4);
    CHECK_THROWS_AS(tent.evaluate(1.5), std::out_of_range);
}

TEST_CASE("values at delta follow the convention") {
    PcMap t2 = catalog_get("mod2").map;
    CHECK(t2.evaluate(0.5) == 1.0);
    CHECK(t2.with_convention(DeltaConvention::right_limit).evaluate(0.5) == 0.0);
    PcMap right = parse_map("domain = [0, 1]\nat_delta = right\npiece (0, 1/2): 2*x inc\npiece (1/2, 1): 2*x - 1 inc\n");
    CHECK(right.evaluate(0.5) == 0.0);
    // The value at a Δ point is the limit from the chosen side.
    for (double h = 1e-3; h > 1e-9; h /= 10) CHECK(std::abs(t2.evaluate(0.5 - h) - t2.evaluate(0.5)) < 3 * h);
}

TEST_CASE("branch inverse") {
    PcMap tent = parse_map(kTent);
    auto y = branch_inverse(tent.branch(1), 0.5);
    REQUIRE(y);
    CHECK(*y == 0.75);
    CHECK_FALSE(branch_inverse(tent.branch(0), 1.5));
    PcMap cube = parse_map("domain = [0, 1]\npiece (0, 1): x^3 inc\n");
    auto c = branch_inverse(cube.branch(0), 0.125);
    REQUIRE(c);
    CHECK(std::abs(*c - 0.5) <= 1e-13);
}

TEST_CASE("inverse undoes evaluation on every catalog branch") {
    std::mt19937_64 rng(7);
    for (const std::string& name : catalog_names()) {
        PcMap m = catalog_get(name).map;
        for (const Branch& b : m.branches()) {
            std::uniform_real_distribution<double> u(b.piece.lo(), b.piece.hi());
            for (int k = 0; k < 1000; ++k) {
                double x = u(rng);
                auto back = branch_inverse(b, b.value(x));
                REQUIRE(back);
                CHECK(std::abs(*back - x) <= 1e-9);
            }
        }
    }
}

TEST_CASE("catalog branches are strictly monotone as declared") {
    for (const std::string& name : catalog_names()) {
        PcMap m = catalog_get(name).map;
        for (const Branch& b : m.branches()) {
            double prev = b.value(b.piece.lo());
            for (int k = 1; k <= 1000; ++k) {
                double x = b.piece.lo() + b.piece.diameter() * k / 1000.0;
                double v = b.value(x);
                CHECK(sign_of(b.monotonicity) * (v - prev) > 0);
                prev = v;
            }
        }
    }
}

TEST_CASE("orbit avoids delta") {
    PcMap tent = parse_map(kTent);
    CHECK_FALSE(tent.orbit_avoids_delta(0.5, 1));
    CHECK(tent.orbit_avoids_delta(1.0 / 3, 10));
    CHECK_FALSE(tent.orbit_avoids_delta(0.25, 2));
    PcMap id = catalog_get("identity").map;
    CHECK(id.orbit_avoids_delta(0.5, 100));
}

TEST_CASE("map text round-trips") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = catalog_get(name);
        PcMap again = parse_map(e.map.to_text());
        REQUIRE(again.piece_count() == e.map.piece_count());
        CHECK(again.delta().same_as(e.map.delta(), 1e-15));
        for (double x : {0.01, 0.2, 0.33, 0.5, 0.71, 0.9, 0.99}) CHECK(again.evaluate(x) == doctest::Approx(e.map.evaluate(x)));
    }
}
