// pcentropy: topological entropy of piecewise continuous interval maps.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcent/bowen.hpp"
#include "pcent/catalog.hpp"
#include "pcent/cover.hpp"
#include "pcent/error.hpp"
#include "pcent/format.hpp"
#include "pcent/report.hpp"
#include "pcent/symbolic.hpp"
#include "pcent/transforms.hpp"
#include "pcent/verify.hpp"

using namespace pcent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitTruncated = 2;

struct RunConfig {
    std::string catalog;
    std::string map_file;
    std::string method = "ms";
    int n_max = 0;  // 0: per-method default
    std::vector<double> eps = {0.05, 0.02, 0.01, 0.005};
    int grid = 8193;
    std::string region;
    std::string cover;
    std::string phi;
    std::string chart;
    int power_k = 0;
    std::string output = "csv";
    std::string out_file;
    std::string plot;
    std::string estimator;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PcMap load_map(const RunConfig& cfg) {
    if (!cfg.catalog.empty() && !cfg.map_file.empty()) throw ValidationError("give either --catalog or --map, not both");
    if (!cfg.catalog.empty()) {
        try {
            return catalog_get(cfg.catalog).map;
        } catch (const std::out_of_range& e) {
            throw ValidationError(e.what());
        }
    }
    if (!cfg.map_file.empty()) return parse_map(read_file(cfg.map_file));
    throw ValidationError("a map is required: --catalog NAME or --map FILE");
}

// Applies --power-k and --phi in that order.
PcMap transformed(PcMap map, const RunConfig& cfg) {
    if (cfg.power_k < 0) throw ValidationError("--power-k must be >= 1");
    if (cfg.power_k > 0) map = iterate_map(map, cfg.power_k);
    if (!cfg.phi.empty()) map = conjugate_map(map, parse_plhomeo(cfg.phi));
    return map;
}

int default_n_max(const std::string& method) {
    if (method == "bowen") return 12;
    if (method == "cover") return 8;
    return 10;
}

void summarize(const EntropySeries& s) {
    std::cerr << to_string(s.method) << ": " << format_real(s.estimate) << " (" << to_string(s.estimator) << ", "
              << s.records.size() << " records)";
    if (s.truncated) std::cerr << " truncated";
    if (!s.note.empty()) std::cerr << " [" << s.note << "]";
    std::cerr << '\n';
}

int cmd_entropy(const RunConfig& cfg) {
    static const std::vector<std::string> methods = {"ms", "bowen", "cover", "all"};
    if (std::find(methods.begin(), methods.end(), cfg.method) == methods.end()) {
        throw ValidationError("unknown method '" + cfg.method + "' (ms, bowen, cover, all)");
    }
    const auto format = parse_output_format(cfg.output);
    if (!format) throw ValidationError("unknown output format '" + cfg.output + "' (csv, tsv, json-lines)");
    std::optional<Estimator> estimator;
    if (!cfg.estimator.empty()) {
        estimator = parse_estimator(cfg.estimator);
        if (!estimator) throw ValidationError("unknown estimator '" + cfg.estimator + "'");
    }

    const PcMap map = transformed(load_map(cfg), cfg);
    const RegionSet region = cfg.region.empty() ? RegionSet() : parse_region(cfg.region);
    const bool all = cfg.method == "all";
    std::vector<EntropySeries> series;

    if (all || cfg.method == "ms") {
        const int n = cfg.n_max > 0 ? cfg.n_max : default_n_max("ms");
        const PcMap target = region.empty() ? map : restrict_map(map, region).as_map();
        series.push_back(ms_entropy(target, n, estimator.value_or(Estimator::slope_fit)));
    }
    if (all || cfg.method == "bowen") {
        const int n_hi = cfg.n_max > 0 ? cfg.n_max : default_n_max("bowen");
        std::vector<int> ns;
        for (int n = std::max(1, (n_hi + 2) / 3); n <= n_hi; ++n) ns.push_back(n);
        BowenOptions bo;
        if (!cfg.chart.empty()) {
            auto chart = std::make_shared<PlHomeo>(parse_plhomeo(cfg.chart));
            bo.chart = [chart](double x) { return (*chart)(x); };
        }
        BowenResult b = bowen_entropy(map, region, ns, cfg.eps, cfg.grid, bo);
        std::cerr << "bowen: separated from eps=" << format_real(b.estimate_eps) << ", spanning from eps="
                  << format_real(b.spanning_eps) << "; sandwich "
                  << (b.sandwich_ok ? "holds" : "fails at " + b.sandwich_witness) << "; " << b.sample.points.size()
                  << " sample points (" << b.sample.nudged << " nudged, " << b.sample.dropped << " dropped)\n";
        series.push_back(std::move(b.separated));
        series.push_back(std::move(b.spanning));
    }
    if (all || cfg.method == "cover") {
        const int n = cfg.n_max > 0 ? cfg.n_max : default_n_max("cover");
        const Cover c = cfg.cover.empty() ? natural_cover(map) : parse_cover(cfg.cover, map.domain());
        CoverOptions co;
        co.region = region;
        series.push_back(cover_entropy(map, c, n, estimator.value_or(Estimator::fekete_min), co));
    }

    if (cfg.out_file.empty()) {
        write_series(std::cout, series, *format);
    } else {
        std::ofstream out(cfg.out_file, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + cfg.out_file);
        write_series(out, series, *format);
    }
    if (!cfg.plot.empty()) {
        std::ofstream svg(cfg.plot, std::ios::binary);
        if (!svg) throw ValidationError("cannot write " + cfg.plot);
        write_svg(svg, series, cfg.catalog.empty() ? cfg.map_file : cfg.catalog);
    }

    bool truncated = false;
    for (const EntropySeries& s : series) {
        summarize(s);
        truncated = truncated || s.truncated;
    }
    return truncated ? kExitTruncated : kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyConfig vc;
    vc.n_max = cfg.n_max > 0 ? cfg.n_max : 10;
    if (cfg.power_k > 0) vc.power_k = cfg.power_k;
    if (!cfg.phi.empty()) vc.phi = parse_plhomeo(cfg.phi);
    const auto checks = verify_map(load_map(cfg), vc);
    bool ok = true;
    for (const CheckResult& c : checks) {
        std::cout << c.property << ": " << to_string(c.status);
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
        ok = ok && c.status != CheckStatus::fail;
    }
    return ok ? kExitOk : kExitInvalid;
}

int cmd_catalog_list() {
    for (const std::string& name : catalog_names()) {
        const CatalogEntry e = catalog_get(name);
        std::cout << name << '\t';
        if (e.known_entropy) {
            std::cout << "h=" << format_real(*e.known_entropy);
        } else if (e.entropy_lower_bound) {
            std::cout << "h>=" << format_real(*e.entropy_lower_bound);
        }
        std::cout << '\t' << e.provenance << '\n';
    }
    return kExitOk;
}

int cmd_catalog_show(const std::string& name) {
    try {
        std::cout << catalog_get(name).source;
    } catch (const std::out_of_range& e) {
        throw ValidationError(e.what());
    }
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    const PcMap map = parse_map(read_file(path));
    std::cout << path << ": ok, " << map.piece_count() << " pieces on " << map.domain().to_string() << ", Δ = {";
    bool first = true;
    for (double d : map.delta()) {
        std::cout << (first ? "" : ", ") << format_real(d);
        first = false;
    }
    std::cout << "}\n";
    return kExitOk;
}

void add_map_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--catalog", cfg.catalog, "built-in map name");
    sub->add_option("--map", cfg.map_file, "map definition file (.pcm)");
    sub->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
    sub->add_option("--power-k", cfg.power_k, "replace f by f^k")->check(CLI::PositiveNumber);
    sub->add_option("--phi", cfg.phi, "conjugate by a piecewise-affine homeomorphism [(x0,y0),...]");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological entropy of piecewise continuous interval maps"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* entropy = app.add_subcommand("entropy", "estimate entropy and write per-n series");
    add_map_options(entropy, cfg);
    entropy->add_option("--method", cfg.method, "ms, bowen, cover or all")->capture_default_str();
    entropy->add_option("--eps", cfg.eps, "Bowen eps schedule, decreasing")->delimiter(',')->capture_default_str();
    entropy->add_option("--grid", cfg.grid, "Bowen sample grid size")->capture_default_str();
    entropy->add_option("--region", cfg.region, "region [a,b] or [a,b]|[c,d]");
    entropy->add_option("--cover", cfg.cover, "cover literal {(a,b), (c,d)|(e,f)}");
    entropy->add_option("--chart", cfg.chart, "measure Bowen distances through this homeomorphism");
    entropy->add_option("--output", cfg.output, "csv, tsv or json-lines")->capture_default_str();
    entropy->add_option("-o,--out", cfg.out_file, "write the series here instead of stdout");
    entropy->add_option("--plot", cfg.plot, "write an SVG chart");
    entropy->add_option("--estimator", cfg.estimator, "last-ratio, slope-fit or fekete-min");

    auto* verify = app.add_subcommand("verify", "check invariants and print a pass/fail table");
    add_map_options(verify, cfg);

    auto* catalog = app.add_subcommand("catalog", "built-in maps");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list built-in maps");
    std::string show_name;
    auto* show = catalog->add_subcommand("show", "print a built-in map definition");
    show->add_option("name", show_name)->required();

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "parse and validate a map file");
    validate->add_option("file", validate_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*entropy) return cmd_entropy(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*list) return cmd_catalog_list();
        if (*show) return cmd_catalog_show(show_name);
        if (*validate) return cmd_validate(validate_path);
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTruncated;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
