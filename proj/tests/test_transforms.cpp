#include <doctest.h>

#include <cmath>

#include "pcent/catalog.hpp"
#include "pcent/symbolic.hpp"
#include "pcent/transforms.hpp"

using namespace pcent;

namespace {

PcMap cat(const char* name) { return catalog_get(name).map; }

std::vector<std::size_t> counts(const PcMap& m, int n_max) {
    std::vector<std::size_t> c;
    for (int n = 1; n <= n_max; ++n) c.push_back(count_pieces(m, n));
    return c;
}

std::vector<std::size_t> delta_sizes(const PcMap& m, int n_max) {
    std::vector<std::size_t> c;
    for (int n = 1; n <= n_max; ++n) c.push_back(delta_n(m, n).size());
    return c;
}

}  // namespace

TEST_CASE("piecewise-affine homeomorphisms") {
    PlHomeo phi = parse_plhomeo("[(0,0),(0.4,0.6),(1,1)]");
    CHECK(phi(0.2) == doctest::Approx(0.3));
    CHECK(phi(0.7) == doctest::Approx(0.8));
    CHECK(phi.inverse(0.8) == doctest::Approx(0.7));
    CHECK(phi.increasing());
    for (int k = 0; k <= 100; ++k) CHECK(phi.inverse(phi(k / 100.0)) == doctest::Approx(k / 100.0).epsilon(1e-14));
    PlHomeo down = parse_plhomeo("[(0,1),(1,0)]");
    CHECK_FALSE(down.increasing());
    CHECK_THROWS(parse_plhomeo("[(0,0),(0.5,0.7),(1,0.6)]"));
    CHECK_THROWS(parse_plhomeo("[(0,0),(0,1)]"));
    CHECK_THROWS(parse_plhomeo("[(0,0)]"));
}

TEST_CASE("iterate_map") {
    const PcMap tent = cat("tent");
    PcMap t2 = iterate_map(tent, 2);
    CHECK(t2.piece_count() == 4);
    CHECK(t2.delta().same_as(PointSet({0.25, 0.5, 0.75}), 1e-14));
    PcMap t1 = iterate_map(tent, 1);
    CHECK(t1.delta().same_as(tent.delta(), 0));
    for (double x : {0.1, 0.3, 0.6, 0.9}) CHECK(t1.evaluate(x) == tent.evaluate(x));
    PcMap t0 = iterate_map(tent, 0);
    CHECK(t0.piece_count() == 1);
    for (double x : {0.0, 0.3, 1.0}) CHECK(t0.evaluate(x) == x);
    CHECK_THROWS(iterate_map(tent, -1));
}

TEST_CASE("iterated branches agree with repeated evaluation") {
    for (const char* name : {"tent", "mod3", "anzie", "lorenz-full", "pw-contraction"}) {
        const PcMap m = cat(name);
        for (int k : {2, 3}) {
            PcMap mk = iterate_map(m, k);
            for (int i = 0; i < 1000; ++i) {
                const double x = (i + 0.5) / 1000;
                if (!m.orbit_avoids_delta(x, k)) continue;
                CHECK(std::abs(mk.evaluate(x) - m.orbit(x, k + 1).back()) <= 1e-9);
            }
        }
    }
}

TEST_CASE("piece counts of powers") {
    for (const char* name : {"tent", "mod3"}) {
        const PcMap f = cat(name);
        const auto base = counts(f, 12);
        for (int k : {2, 3}) {
            PcMap fk = iterate_map(f, k);
            for (int n = 1; k * n <= 12; ++n) CHECK(count_pieces(fk, n) == base[static_cast<std::size_t>(k * n - 1)]);
        }
    }
}

TEST_CASE("conjugate_map") {
    const PcMap tent = cat("tent");
    PcMap same = conjugate_map(tent, PlHomeo::identity(tent.domain()));
    CHECK(same.delta().same_as(tent.delta(), 1e-15));
    for (double x : {0.1, 0.3, 0.6, 0.9}) CHECK(same.evaluate(x) == doctest::Approx(tent.evaluate(x)));

    PcMap wide = conjugate_map(tent, parse_plhomeo("[(0,0),(1,2)]"));
    CHECK(wide.domain().lo() == 0);
    CHECK(wide.domain().hi() == 2);
    CHECK(wide.delta().same_as(PointSet({1.0}), 1e-15));
    CHECK(wide.evaluate(0.5) == doctest::Approx(1.0));
    CHECK(wide.evaluate(1.5) == doctest::Approx(1.0));

    PlHomeo phi = parse_plhomeo("[(0,0),(0.4,0.6),(1,1)]");
    PcMap g = conjugate_map(tent, phi);
    for (double x : {0.1, 0.3, 0.45, 0.8}) CHECK(g.evaluate(phi(x)) == doctest::Approx(phi(tent.evaluate(x))));
    CHECK(g.delta().same_as(PointSet({phi(0.5)}), 1e-14));

    // A decreasing φ reverses the pieces.
    PcMap flipped = conjugate_map(cat("asym-tent"), parse_plhomeo("[(0,1),(1,0)]"));
    CHECK(flipped.delta().same_as(PointSet({0.7}), 1e-14));
    CHECK(flipped.branch(0).monotonicity == Monotonicity::decreasing);
    CHECK(flipped.evaluate(0.2) == doctest::Approx(1 - cat("asym-tent").evaluate(0.8)));
}

TEST_CASE("conjugacy keeps the combinatorics") {
    PlHomeo phi = parse_plhomeo("[(0,0),(0.4,0.6),(1,1)]");
    const PcMap t2 = cat("mod2");
    CHECK(counts(conjugate_map(t2, phi), 8) == counts(t2, 8));
    const PcMap tent = cat("tent");
    PcMap g = conjugate_map(tent, phi);
    CHECK(counts(g, 10) == counts(tent, 10));
    CHECK(delta_sizes(g, 10) == delta_sizes(tent, 10));
    for (int n = 1; n <= 6; ++n) {
        std::vector<double> mapped;
        for (double p : delta_n(tent, n)) mapped.push_back(phi(p));
        CHECK(delta_n(g, n).same_as(PointSet(mapped), 1e-12));
    }
}

TEST_CASE("restrict_map") {
    const PcMap anzie = cat("anzie");
    RestrictedMap r = restrict_map(anzie, parse_region("[0.7, 1]"));
    CHECK(r.report().pass);
    PcMap inner = r.as_map();
    CHECK(inner.domain().lo() == 0.7);
    CHECK(inner.piece_count() == 2);
    CHECK(std::abs(ms_entropy(inner, 10).estimate - std::log(2.0)) <= 1e-6);

    const PcMap tent = cat("tent");
    CHECK(restrict_map(tent, RegionSet(tent.domain())).report().pass);
    try {
        restrict_map(tent, parse_region("[0, 0.5]"));
        FAIL("the left half of the tent is not invariant");
    } catch (const InvarianceError& e) {
        CHECK(e.witness() > 0.25);
        CHECK(tent.evaluate(e.witness()) > 0.5);
    }
    InvarianceReport rep = check_invariance(tent, parse_region("[0, 0.5]"));
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.witness);
}
