#include <doctest.h>

#include "pcent/catalog.hpp"
#include "pcent/kernels.hpp"
#include "pcent/symbolic.hpp"

using namespace pcent;
namespace k = pcent::kernels;

namespace {

std::vector<double> grid(std::size_t m) {
    std::vector<double> xs;
    for (std::size_t i = 0; i < m; ++i) xs.push_back((static_cast<double>(i) + 0.37) / static_cast<double>(m));
    return xs;
}

}  // namespace

TEST_CASE("serial and openmp kernels give identical output") {
    for (const std::string& name : catalog_names()) {
        CAPTURE(name);
        const PcMap m = catalog_get(name).map;
        const PointSet d = delta_n(m, 6);
        std::vector<double> targets(d.begin(), d.end());
        CHECK(k::serial::preimage_level(m, targets, 1e-14) == k::omp::preimage_level(m, targets, 1e-14));

        std::vector<double> cuts;
        for (double p : d) {
            if (p > m.domain().lo() && p < m.domain().hi()) cuts.push_back(p);
        }
        CHECK(k::serial::removable_junctions(m, cuts, 6, 1e-9) == k::omp::removable_junctions(m, cuts, 6, 1e-9));

        const auto xs = grid(3001);
        const auto a = k::serial::orbit_table(m, xs, 7);
        const auto b = k::omp::orbit_table(m, xs, 7);
        CHECK(a.coord == b.coord);
        CHECK(a.code == b.code);

        std::vector<k::BowenCell> cells;
        for (int n = 1; n <= 7; ++n) {
            for (double eps : {0.1, 0.03, 0.01}) cells.push_back({n, eps});
        }
        const auto ra = k::serial::bowen_cells(a, cells);
        const auto rb = k::omp::bowen_cells(b, cells);
        REQUIRE(ra.size() == rb.size());
        for (std::size_t i = 0; i < ra.size(); ++i) {
            CHECK(ra[i].separated == rb[i].separated);
            CHECK(ra[i].centers == rb[i].centers);
            CHECK(ra[i].max_gap == rb[i].max_gap);
            CHECK(ra[i].split_pairs == rb[i].split_pairs);
        }
    }
}

TEST_CASE("orbit table rows follow the map") {
    const PcMap tent = catalog_get("tent").map;
    const auto t = k::serial::orbit_table(tent, std::vector<double>{0.1, 0.3}, 3);
    CHECK(t.at(0, 0) == 0.1);
    CHECK(t.at(0, 1) == doctest::Approx(0.2));
    CHECK(t.at(0, 2) == doctest::Approx(0.4));
    CHECK(t.code_at(1, 0) == 0);
    CHECK(t.code_at(1, 1) == 1);
    CHECK(t.rho(0, 1, 1) == doctest::Approx(0.2));
    CHECK(t.rho(0, 1, 3) == doctest::Approx(0.4));
    CHECK(t.within(0, 1, 1, 0.25));
    CHECK_FALSE(t.within(0, 1, 2, 0.25));
    const auto charted = k::serial::orbit_table(tent, std::vector<double>{0.1}, 2, [](double x) { return 3 * x; });
    CHECK(charted.at(0, 1) == doctest::Approx(0.6));
}
