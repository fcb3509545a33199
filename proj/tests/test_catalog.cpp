#include <doctest.h>

#include <cmath>

#include "pcent/catalog.hpp"
#include "pcent/symbolic.hpp"
#include "pcent/transforms.hpp"

using namespace pcent;

TEST_CASE("listing") {
    auto names = catalog_names();
    CHECK(names.size() == 10);
    for (const char* n : {"mod2", "mod3", "mod5", "tent", "asym-tent", "lorenz-full", "anzie", "iet2-golden", "pw-contraction",
                          "identity"}) {
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
}

TEST_CASE("entries") {
    CatalogEntry t3 = catalog_get("mod3");
    CHECK(t3.map.piece_count() == 3);
    CHECK(t3.map.delta().same_as(PointSet({1.0 / 3, 2.0 / 3}), 1e-15));
    REQUIRE(t3.known_entropy);
    CHECK(*t3.known_entropy == std::log(3.0));
    CHECK(catalog_get("identity").known_entropy == 0.0);
    CatalogEntry a = catalog_get("anzie");
    CHECK_FALSE(a.known_entropy);
    CHECK(a.entropy_lower_bound == std::log(2.0));
    CHECK(catalog_get("asym-tent").map.delta().same_as(PointSet({0.3}), 1e-15));
}

TEST_CASE("interval exchange is injective") {
    CatalogEntry e = catalog_get("iet2-golden");
    CHECK(e.known_entropy == 0.0);
    std::vector<double> images;
    for (int k = 0; k < 2000; ++k) images.push_back(e.map.evaluate((k + 0.5) / 2000));
    std::sort(images.begin(), images.end());
    for (std::size_t k = 1; k < images.size(); ++k) CHECK(images[k] - images[k - 1] > 1e-6);
    const double a = (std::sqrt(5.0) - 1) / 2;
    CHECK(e.map.delta()[0] == doctest::Approx(a).epsilon(1e-15));
}

TEST_CASE("unknown names list the catalog") {
    CHECK_THROWS_WITH_AS(catalog_get("logistic"), doctest::Contains("mod2"), std::out_of_range);
    CHECK_THROWS_WITH_AS(catalog_get("logistic"), doctest::Contains("pw-contraction"), std::out_of_range);
}

TEST_CASE("sources round-trip") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = catalog_get(name);
        PcMap again = parse_map(e.source);
        CHECK(again.delta().same_as(e.map.delta(), 0));
        PcMap printed = parse_map(e.map.to_text());
        for (int k = 1; k < 50; ++k) CHECK(printed.evaluate(k / 50.0) == doctest::Approx(e.map.evaluate(k / 50.0)).epsilon(1e-14));
    }
}

TEST_CASE("known entropies match the piece counts") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = catalog_get(name);
        if (!e.known_entropy || *e.known_entropy == 0) continue;
        const int n_max = name == "mod5" ? 8 : 10;
        CHECK(std::abs(ms_entropy(e.map, n_max).estimate - *e.known_entropy) <= 1e-9);
    }
    for (const char* name : {"iet2-golden", "pw-contraction", "identity"}) {
        CHECK(ms_entropy(catalog_get(name).map, 40).estimate <= 0.02);
    }
    CHECK(restrict_map(catalog_get("anzie").map, parse_region("[0.7, 1]")).report().pass);
}
