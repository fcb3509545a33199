#include "pcent/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace pcent {

namespace {

struct Builtin {
    const char* name;
    const char* source;
    std::optional<double> known;
    std::optional<double> lower;
    const char* provenance;
};

const std::vector<Builtin>& builtins() {
    static const std::vector<Builtin> all = {
        {"mod2",
         "# doubling map x -> 2x mod 1\n"
         "domain = [0, 1]\n"
         "piece (0, 1/2): 2*x inc\n"
         "piece (1/2, 1): 2*x - 1 inc\n",
         std::log(2.0), std::nullopt, "mod-N family, N = 2; entropy log N"},
        {"mod3",
         "# x -> 3x mod 1\n"
         "domain = [0, 1]\n"
         "piece (0, 1/3): 3*x inc\n"
         "piece (1/3, 2/3): 3*x - 1 inc\n"
         "piece (2/3, 1): 3*x - 2 inc\n",
         std::log(3.0), std::nullopt, "mod-N family, N = 3; entropy log N"},
        {"mod5",
         "# x -> 5x mod 1\n"
         "domain = [0, 1]\n"
         "piece (0, 1/5): 5*x inc\n"
         "piece (1/5, 2/5): 5*x - 1 inc\n"
         "piece (2/5, 3/5): 5*x - 2 inc\n"
         "piece (3/5, 4/5): 5*x - 3 inc\n"
         "piece (4/5, 1): 5*x - 4 inc\n",
         std::log(5.0), std::nullopt, "mod-N family, N = 5; entropy log N"},
        {"tent",
         "domain = [0, 1]\n"
         "piece (0, 0.5): 2*x inc\n"
         "piece (0.5, 1): 2 - 2*x dec\n",
         std::log(2.0), std::nullopt, "tent map, two onto branches; entropy log 2"},
        {"asym-tent",
         "# peak at 0.3, both branches onto [0, 1]\n"
         "domain = [0, 1]\n"
         "piece (0, 0.3): x/0.3 inc\n"
         "piece (0.3, 1): (1 - x)/0.7 dec\n",
         std::log(2.0), std::nullopt, "unequal pieces, two onto branches; entropy log 2"},
        {"lorenz-full",
         "# two increasing onto branches, nonlinear\n"
         "domain = [0, 1]\n"
         "piece (0, 0.5): 4*x - 4*x^2 inc\n"
         "piece (0.5, 1): (2*x - 1)^2 inc\n",
         std::log(2.0), std::nullopt, "Lorenz-like map with two onto branches; entropy log 2"},
        {"anzie",
         "# four monotone pieces; [0.7, 1] carries a tent map onto itself\n"
         "domain = [0, 1]\n"
         "piece (0, 0.3): 0.7*(1 - (1 - x/0.3)^2) inc\n"
         "piece (0.3, 0.7): 0.55 + 0.45*((x - 0.3)/0.4)^2 inc\n"
         "piece (0.7, 0.85): 0.7 + 2*(x - 0.7) inc\n"
         "piece (0.85, 1): 1 - 2*(x - 0.85) dec\n",
         std::nullopt, std::log(2.0), "four-branch map with an invariant tent on its last two pieces; entropy >= log 2"},
        {"iet2-golden",
         "# rotation by 1 - a with a = (sqrt(5) - 1)/2\n"
         "domain = [0, 1]\n"
         "piece (0, 0.6180339887498949): x + 0.3819660112501051 inc\n"
         "piece (0.6180339887498949, 1): x - 0.6180339887498949 inc\n",
         0.0, std::nullopt, "two-interval exchange with golden split; injective, entropy 0"},
        {"pw-contraction",
         "# injective, slopes 0.5 and -0.4\n"
         "domain = [0, 1]\n"
         "piece (0, 0.5): 0.5*x + 0.45 inc\n"
         "piece (0.5, 1): -0.4*x + 0.6 dec\n",
         0.0, std::nullopt, "injective piecewise contraction; entropy 0"},
        {"identity",
         "domain = [0, 1]\n"
         "piece (0, 1): x inc\n",
         0.0, std::nullopt, "identity; entropy 0"},
    };
    return all;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const Builtin& s : builtins()) out.emplace_back(s.name);
    return out;
}

CatalogEntry catalog_get(const std::string& name) {
    for (const Builtin& s : builtins()) {
        if (name == s.name) return CatalogEntry{s.name, s.source, parse_map(s.source), s.known, s.lower, s.provenance};
    }
    std::string list;
    for (const Builtin& s : builtins()) list += std::string(list.empty() ? "" : ", ") + s.name;
    throw std::out_of_range("unknown catalog entry '" + name + "'; available: " + list);
}

}  // namespace pcent
