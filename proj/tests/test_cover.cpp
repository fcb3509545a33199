#include <doctest.h>

#include <cmath>

#include "pcent/catalog.hpp"
#include "pcent/cover.hpp"
#include "pcent/error.hpp"

using namespace pcent;

namespace {

const Interval X = Interval::closed(0, 1);

PcMap cat(const char* name) { return catalog_get(name).map; }

bool same_cover(const Cover& a, const Cover& b) {
    if (a.size() != b.size()) return false;
    for (const OpenSet& e : a.elements) {
        bool found = false;
        for (const OpenSet& f : b.elements) found = found || e.same_as(f, 1e-12);
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cover literals") {
    Cover c = parse_cover("{(0, 0.6), (0.4, 1)}", X);
    REQUIRE(c.size() == 2);
    // Ends reaching the domain boundary are closed there.
    CHECK(c.elements[0].contains(0.0));
    CHECK(c.elements[1].contains(1.0));
    CHECK_FALSE(c.elements[0].contains(0.6));
    Cover j = parse_cover("{(0, 0.2)|(0.8, 1), (0.1, 0.9)}", X);
    CHECK(j.elements[0].size() == 2);
    Cover clipped = parse_cover("{(-0.1, 0.6), (0.4, 1.1)}", X);
    CHECK(clipped.elements[0].parts()[0].lo() == 0.0);
    CHECK(clipped.elements[1].parts()[0].hi() == 1.0);
    CHECK_THROWS_AS(parse_cover("{(0, 0.6)", X), ParseError);
}

TEST_CASE("natural cover") {
    Cover t = natural_cover(cat("tent"));
    REQUIRE(t.size() == 2);
    CHECK(t.elements[0] == OpenSet(Interval(0, 0.5, false, true)));
    CHECK(t.elements[1] == OpenSet(Interval(0.5, 1, true, false)));
    CHECK(natural_cover(cat("identity")).elements[0] == OpenSet(Interval::closed(0, 1)));
    CHECK(natural_cover(cat("mod3")).size() == 3);
}

TEST_CASE("vee") {
    Cover a = parse_cover("{(0, 0.6), (0.4, 1)}", X);
    Cover b = parse_cover("{(0, 0.5), (0.5, 1)}", X);
    Cover expect = parse_cover("{(0, 0.5), (0.5, 0.6), (0.4, 0.5), (0.5, 1)}", X);
    CHECK(same_cover(vee(a, b), expect));
    Cover whole = parse_cover("{(0, 1)}", X);
    CHECK(same_cover(vee(a, whole), a));
    const RegionSet target(X);
    CHECK(minimal_subcover_cardinality(vee(a, a), target, PointSet()) == minimal_subcover_cardinality(a, target, PointSet()));
}

TEST_CASE("pullback") {
    Cover c = parse_cover("{(0.4, 0.6)}", X);
    Cover p = pullback_cover(cat("tent"), c, 1);
    REQUIRE(p.size() == 1);
    CHECK(p.elements[0].same_as(OpenSet(std::vector<Interval>{Interval::open(0.2, 0.3), Interval::open(0.7, 0.8)}), 1e-14));
    CHECK(same_cover(pullback_cover(cat("tent"), c, 0), c));
    Cover d = parse_cover("{(0, 0.3), (0.2, 0.7)|(0.8, 1)}", X);
    CHECK(same_cover(pullback_cover(cat("identity"), d, 3), d));
}

TEST_CASE("refine_n") {
    const PcMap tent = cat("tent");
    Cover d2 = refine_n(tent, natural_cover(tent), 2);
    REQUIRE(d2.size() == 4);
    auto comps = components_of_complement(X, delta_n(tent, 2));
    std::vector<OpenSet> expect;
    for (const Interval& c : comps) expect.emplace_back(c);
    CHECK(same_cover(d2, Cover{expect, ""}));
    Cover d1 = refine_n(tent, natural_cover(tent), 1);
    CHECK(same_cover(d1, subtract_points(natural_cover(tent), tent.delta())));
    // For the identity, refining a partition gives it back; an overlapping cover
    // gains its pairwise intersections but keeps its cardinality.
    Cover part = parse_cover("{(0, 0.3), (0.3, 0.7), (0.7, 1)}", X);
    CHECK(same_cover(refine_n(cat("identity"), part, 4), part));
    Cover c = parse_cover("{(0, 0.6), (0.4, 1)}", X);
    const RegionSet target(X);
    CHECK(minimal_subcover_cardinality(refine_n(cat("identity"), c, 4), target, PointSet()) ==
          minimal_subcover_cardinality(c, target, PointSet()));
}

TEST_CASE("minimal subcover") {
    const RegionSet target(X);
    CHECK(minimal_subcover_cardinality(parse_cover("{(-0.1, 0.6), (0.4, 1.1)}", X), target, PointSet()) == 2);
    CHECK(minimal_subcover_cardinality(parse_cover("{(0, 1)}", X), target, PointSet()) == 1);
    const PcMap tent = cat("tent");
    CHECK(minimal_subcover_cardinality(refine_n(tent, natural_cover(tent), 2), target, delta_n(tent, 2)) == 4);
    // Redundant elements are not chosen.
    CHECK(minimal_subcover_cardinality(parse_cover("{(0, 0.3), (0.2, 0.5), (0, 0.7), (0.6, 1), (0.65, 1)}", X), target,
                                       PointSet()) == 2);
    // Union elements need the exact search.
    Cover u = parse_cover("{(0, 0.3)|(0.6, 0.8), (0.2, 0.7), (0.75, 1), (0, 0.25)|(0.5, 1)}", X);
    SubcoverResult r = minimal_subcover(u, target, PointSet());
    CHECK(r.cardinality == 2);
    CHECK(r.exact);
    // Excluded points need no cover.
    Cover halves = parse_cover("{(0, 0.5), (0.5, 1)}", X);
    CHECK(minimal_subcover_cardinality(halves, target, PointSet({0.5})) == 2);
    try {
        minimal_subcover(halves, target, PointSet());
        FAIL("0.5 is uncovered");
    } catch (const NotACover& e) {
        CHECK(e.witness() == doctest::Approx(0.5));
    }
}

TEST_CASE("cover entropy") {
    const PcMap tent = cat("tent");
    EntropySeries s = cover_entropy(tent, natural_cover(tent), 8);
    CHECK(std::abs(s.estimate - std::log(2.0)) <= 1e-9);
    for (const auto& r : s.records) CHECK(r.value == std::pow(2.0, r.n));
    EntropySeries id = cover_entropy(cat("identity"), parse_cover("{(0, 1)}", X), 6);
    CHECK(id.estimate == 0);

    EntropySeries halves = cover_entropy(tent, parse_cover("{(0, 0.55), (0.45, 1)}", X), 8);
    CHECK(halves.records.size() == 8);
    CHECK(halves.estimate <= std::log(2.0) + 1e-9);
    CHECK(halves.estimate > 0.5);
    for (const auto& r : halves.records) CHECK(r.flag.empty());
    // A finer cover (the natural one refines the halves cover here) counts at least as much.
    for (std::size_t i = 0; i < halves.records.size(); ++i) CHECK(halves.records[i].value <= s.records[i].value);
}

TEST_CASE("refined natural cover boundary equals delta_n") {
    CHECK(boundary_of_refined_natural_cover(cat("tent"), 2).same_as(PointSet({0.25, 0.5, 0.75}), 1e-14));
    CHECK(boundary_of_refined_natural_cover(cat("identity"), 5).empty());
    CHECK(boundary_of_refined_natural_cover(cat("mod2"), 3).size() == 7);
    for (const char* name : {"tent", "mod3", "anzie", "iet2-golden"}) {
        const PcMap m = cat(name);
        for (int n = 1; n <= 5; ++n) {
            // Δⁿ can hold a domain end (anzie sends 1 into Δ); such points cut nothing.
            std::vector<double> inner;
            for (double p : delta_n(m, n)) {
                if (p > 0 && p < 1) inner.push_back(p);
            }
            CHECK(boundary_of_refined_natural_cover(m, n).same_as(PointSet(inner, 1e-10), 1e-10));
        }
    }
}

TEST_CASE("lebesgue number") {
    Cover c = parse_cover("{(0, 0.6), (0.4, 1)}", X);
    const double delta = lebesgue_number(c, X);
    CHECK(delta > 0);
    CHECK(delta <= 0.1 + 1.0 / 999);
    for (int k = 0; k < 1000; ++k) {
        const double x = k / 999.0;
        const double lo = std::max(0.0, x - delta * 0.999), hi = std::min(1.0, x + delta * 0.999);
        bool inside = false;
        for (const OpenSet& e : c.elements) inside = inside || (e.contains(lo) && e.contains(hi));
        CHECK(inside);
    }
}
