#include <doctest.h>

#include "pcent/error.hpp"
#include "pcent/interval.hpp"

using namespace pcent;

namespace {

OpenSet open1(double a, double b) { return OpenSet(Interval::open(a, b)); }

OpenSet open2(double a, double b, double c, double d) {
    return OpenSet(std::vector<Interval>{Interval::open(a, b), Interval::open(c, d)});
}

}  // namespace

TEST_CASE("interval construction") {
    CHECK(Interval::closed(0, 1).diameter() == 1);
    CHECK(Interval::point(0.3).is_point());
    CHECK_THROWS(Interval(1, 0, false, false));
    CHECK_THROWS(Interval(0.5, 0.5, true, false));
    CHECK(Interval::open(0, 1).contains(0.5));
    CHECK_FALSE(Interval::open(0, 1).contains(0));
    CHECK(Interval(0, 1, false, true).contains(0));
}

TEST_CASE("pointset merges within tolerance") {
    PointSet p({0.5, 0.25, 0.5 + 1e-13, 0.75});
    CHECK(p.size() == 3);
    CHECK(p[0] == 0.25);
    PointSet q({0.1, 0.2}, 1e-10);
    PointSet r = q.merged(PointSet({0.2 + 1e-11, 0.3}, 1e-10));
    CHECK(r.size() == 3);
    CHECK(q.is_subset_of(r, 1e-10));
    CHECK(r.same_as(PointSet({0.1, 0.2, 0.3}), 1e-9));
}

TEST_CASE("components of complement") {
    const Interval X = Interval::closed(0, 1);
    auto none = components_of_complement(X, PointSet());
    REQUIRE(none.size() == 1);
    CHECK(none[0] == Interval::closed(0, 1));

    auto two = components_of_complement(X, PointSet({0.5}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].hi() == 0.5);
    CHECK(two[0].hi_open());
    CHECK(two[1].lo_open());

    CHECK(components_of_complement(X, PointSet({0.25, 0.5, 0.75})).size() == 4);
    // Boundary cuts open that end and add nothing.
    auto edge = components_of_complement(X, PointSet({0.0, 0.5, 1.0}));
    REQUIRE(edge.size() == 2);
    CHECK(edge[0].lo_open());
    CHECK(edge[1].hi_open());
}

TEST_CASE("openset intersect") {
    CHECK(openset_intersect(open1(0, 0.6), open1(0.4, 1)) == open1(0.4, 0.6));
    CHECK(openset_intersect(open1(0, 0.3), open1(0.4, 1)).empty());
    CHECK(openset_intersect(open2(0, 0.5, 0.6, 1), open1(0.4, 0.7)) == open2(0.4, 0.5, 0.6, 0.7));
    // Touching open intervals do not meet.
    CHECK(openset_intersect(open1(0, 0.5), open1(0.5, 1)).empty());
}

TEST_CASE("openset union merges overlapping and abutting parts") {
    CHECK(openset_union(open1(0, 0.5), open1(0.4, 1)) == open1(0, 1));
    // (0,0.5) ∪ (0.5,1) leaves 0.5 out, so two parts remain.
    CHECK(openset_union(open1(0, 0.5), open1(0.5, 1)).size() == 2);
    OpenSet joined = openset_union(OpenSet(Interval(0, 0.5, true, false)), open1(0.5, 1));
    CHECK(joined == open1(0, 1));
}

TEST_CASE("openset subtract points") {
    CHECK(openset_subtract_points(open1(0, 1), PointSet({0.5})) == open2(0, 0.5, 0.5, 1));
    CHECK(openset_subtract_points(open1(0, 1), PointSet({2.0})) == open1(0, 1));
    CHECK(openset_subtract_points(open1(0, 0.5), PointSet({0.25, 0.5})) == open2(0, 0.25, 0.25, 0.5));
    // A closed end at the domain boundary can be removed as well.
    OpenSet closed_end(Interval(0, 0.5, false, true));
    CHECK(openset_subtract_points(closed_end, PointSet({0.0})) == open1(0, 0.5));
}

TEST_CASE("region sets") {
    RegionSet r = parse_region("[0, 0.2]|[0.7, 1]");
    REQUIRE(r.parts().size() == 2);
    CHECK(r.contains(0.1));
    CHECK_FALSE(r.contains(0.5));
    CHECK(r.contains(0.2 + 1e-12, 1e-9));
    CHECK(parse_region("[1/3, 2/3]").parts()[0].lo() == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(RegionSet(std::vector<Interval>{Interval::closed(0, 0.5), Interval::closed(0.4, 1)}), ValidationError);
    CHECK_THROWS_AS(parse_region("[0, 1"), ParseError);
}
