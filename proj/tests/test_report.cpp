#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pcent/bowen.hpp"
#include "pcent/catalog.hpp"
#include "pcent/report.hpp"
#include "pcent/symbolic.hpp"

using namespace pcent;

namespace {

EntropySeries small_series() {
    EntropySeries s;
    s.method = Method::misiurewicz_szlenk;
    s.records = {{1, 2, std::nullopt, ""}, {2, 4, std::nullopt, ""}, {3, 8, std::nullopt, "capped"}};
    s.estimate = std::log(2.0);
    s.estimator = Estimator::fekete_min;
    return s;
}

std::string csv(const std::vector<EntropySeries>& s, OutputFormat f = OutputFormat::csv) {
    std::ostringstream os;
    write_series(os, s, f);
    return os.str();
}

}  // namespace

TEST_CASE("output format names") {
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK(parse_output_format("tsv") == OutputFormat::tsv);
    CHECK(parse_output_format("jsonl") == OutputFormat::jsonl);
    CHECK_FALSE(parse_output_format("xml"));
}

TEST_CASE("csv layout") {
    CHECK(csv({small_series()}) ==
          "method,n,eps,value,flag\n"
          "ms,1,,2,\n"
          "ms,2,,4,\n"
          "ms,3,,8,capped\n"
          "estimate,,,0.69314718055994529,fekete-min\n");
    EntropySeries b;
    b.method = Method::bowen_separated;
    b.records = {{4, 17, 0.05, ""}};
    b.estimate = 0.5;
    CHECK(csv({b}, OutputFormat::tsv) ==
          "method\tn\teps\tvalue\tflag\n"
          "bowen-separated\t4\t0.050000000000000003\t17\t\n"
          "estimate\t\t\t0.5\tslope-fit\n");
}

TEST_CASE("csv is byte-stable across runs") {
    const PcMap tent = catalog_get("tent").map;
    auto run = [&] {
        BowenResult r = bowen_entropy(tent, RegionSet(tent.domain()), {3, 4, 5, 6}, {0.05, 0.02}, 1025);
        return csv({ms_entropy(tent, 8), r.separated, r.spanning});
    };
    const std::string a = run();
    CHECK(a == run());
    CHECK(a.find('\r') == std::string::npos);
}

TEST_CASE("jsonl rows parse") {
    EntropySeries s = small_series();
    s.estimate = std::numeric_limits<double>::quiet_NaN();
    s.note = "too few records";
    std::istringstream in(csv({s}, OutputFormat::jsonl));
    std::vector<nlohmann::json> rows;
    for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["method"] == "ms");
    CHECK(rows[2]["flag"] == "capped");
    CHECK(rows[0]["eps"].is_null());
    CHECK(rows[3]["method"] == "estimate");
    CHECK(rows[3]["value"].is_null());
    CHECK(rows[3]["note"] == "too few records");
}

TEST_CASE("svg chart") {
    EntropySeries b;
    b.method = Method::bowen_spanning;
    b.records = {{4, 10, 0.05, ""}, {5, 20, 0.05, ""}, {4, 30, 0.02, ""}, {5, 70, 0.02, ""}};
    std::ostringstream os;
    write_svg(os, {small_series(), b}, "tent");
    const std::string svg = os.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);
    std::size_t lines = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++lines;
    CHECK(lines == 3);
    CHECK(svg.find("href") == std::string::npos);
    std::ostringstream empty;
    write_svg(empty, {}, "nothing");
    CHECK(empty.str().find("</svg>") != std::string::npos);
}
