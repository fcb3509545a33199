#include "pcent/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pcent/catalog.hpp"
#include "pcent/cover.hpp"
#include "pcent/error.hpp"
#include "pcent/format.hpp"
#include "pcent/symbolic.hpp"

namespace pcent {

namespace {

using Rng = std::mt19937_64;

void violation(SuiteReport& r, const std::string& what) {
    if (r.violations++ == 0) r.witness = what;
}

// Endpoints on a 1/64 lattice so that membership at ends is exercised by the grid.
Interval lattice_interval(Rng& rng) {
    std::uniform_int_distribution<int> end(0, 64);
    std::bernoulli_distribution coin(0.5);
    int a = end(rng), b = end(rng);
    while (a == b) b = end(rng);
    if (a > b) std::swap(a, b);
    return Interval(a / 64.0, b / 64.0, coin(rng), coin(rng));
}

std::vector<Interval> lattice_parts(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<Interval> parts;
    for (int k = count(rng); k > 0; --k) parts.push_back(lattice_interval(rng));
    return parts;
}

bool any_contains(const std::vector<Interval>& parts, double x) {
    return std::any_of(parts.begin(), parts.end(), [x](const Interval& p) { return p.contains(x); });
}

// Parts sorted, disjoint and not joinable.
bool canonical(const OpenSet& s) {
    auto p = s.parts();
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i].lo() < p[i - 1].hi()) return false;
        if (p[i].lo() == p[i - 1].hi() && (!p[i].lo_open() || !p[i - 1].hi_open())) return false;
    }
    return true;
}

// A random cover of [0, 1]: overlapping consecutive intervals, sometimes joined
// into union elements, sometimes with spare elements.
Cover random_cover(Rng& rng) {
    std::uniform_int_distribution<int> cuts_n(1, 5);
    std::uniform_real_distribution<double> u(0, 1), pad(0.005, 0.1);
    std::vector<double> cuts{0.0};
    for (int k = cuts_n(rng); k > 0; --k) cuts.push_back(u(rng));
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    auto clipped = [](double lo, double hi) {
        lo = std::max(0.0, lo);
        hi = std::min(1.0, hi);
        return Interval(lo, hi, lo > 0, hi < 1);
    };
    std::vector<OpenSet> elems;
    for (std::size_t i = 1; i < cuts.size(); ++i) elems.emplace_back(clipped(cuts[i - 1] - pad(rng), cuts[i] + pad(rng)));
    if (elems.size() >= 3 && std::bernoulli_distribution(0.3)(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 3);
        const std::size_t a = pick(rng);
        elems[a] = openset_union(elems[a], elems[a + 2]);
    }
    if (std::bernoulli_distribution(0.5)(rng)) {
        const double c = u(rng), w = pad(rng) * 2;
        elems.emplace_back(clipped(c - w, c + w));
    }
    return Cover{elems, ""};
}

Cover with_spares(const Cover& c, Rng& rng) {
    std::uniform_real_distribution<double> u(0, 1), w(0.02, 0.4);
    Cover d = c;
    for (int k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) {
        const double lo = std::max(0.0, u(rng) - 0.2), hi = std::min(1.0, lo + w(rng));
        if (hi > lo) d.elements.emplace_back(Interval(lo, hi, lo > 0, hi < 1));
    }
    return d;
}

}  // namespace

SuiteReport check_openset_algebra(const PropertyConfig& cfg) {
    SuiteReport r;
    r.name = "openset algebra vs dense grid";
    Rng rng(cfg.seed);
    std::uniform_int_distribution<int> pt(0, 128), npts(0, 3);
    std::vector<double> grid;
    for (int k = -8; k <= 520; ++k) grid.push_back(k / 512.0);

    for (std::size_t c = 0; c < cfg.openset_cases; ++c) {
        ++r.cases;
        const auto pa = lattice_parts(rng), pb = lattice_parts(rng);
        std::vector<double> cut;
        for (int k = npts(rng); k > 0; --k) cut.push_back(pt(rng) / 128.0);
        const OpenSet a(pa), b(pb);
        const PointSet points(cut);
        const OpenSet both = openset_intersect(a, b), either = openset_union(a, b), holed = openset_subtract_points(a, points);
        std::ostringstream where;
        where << "case " << c << ": A = " << a.to_string() << ", B = " << b.to_string();
        if (!canonical(a) || !canonical(b) || !canonical(both) || !canonical(either) || !canonical(holed)) {
            violation(r, where.str() + ": parts not canonical");
            continue;
        }
        for (double x : grid) {
            const bool in_a = any_contains(pa, x), in_b = any_contains(pb, x);
            bool bad = a.contains(x) != in_a || b.contains(x) != in_b;
            bad = bad || both.contains(x) != (in_a && in_b);
            bad = bad || either.contains(x) != (in_a || in_b);
            bad = bad || holed.contains(x) != (in_a && std::find(cut.begin(), cut.end(), x) == cut.end());
            if (bad) {
                violation(r, where.str() + ", x = " + format_real(x));
                break;
            }
        }
        if (std::abs(either.measure() + both.measure() - a.measure() - b.measure()) > 1e-12) {
            violation(r, where.str() + ": measures do not add up");
        }
    }
    return r;
}

SuiteReport check_aleph_bounds(const PropertyConfig& cfg) {
    SuiteReport r;
    r.name = "minimal cardinality bounds (refinement, inclusion, product, pullback)";
    Rng rng(cfg.seed + 1);
    const RegionSet X(Interval::closed(0, 1));
    const PointSet none;
    const std::vector<std::string> maps{"tent", "mod3", "anzie", "lorenz-full", "iet2-golden", "pw-contraction"};
    std::vector<PcMap> loaded;
    for (const auto& m : maps) loaded.push_back(catalog_get(m).map);
    std::size_t inexact = 0;
    std::string first_inexact;
    auto aleph = [&](const Cover& c, const PointSet& exclude) {
        SubcoverResult s = minimal_subcover(c, X, exclude);
        if (!s.exact && inexact++ == 0) first_inexact = c.to_string();
        return s.cardinality;
    };

    for (std::size_t c = 0; c < cfg.cover_cases; ++c) {
        ++r.cases;
        const Cover C = random_cover(rng), E = random_cover(rng);
        const std::string tag = "cover " + std::to_string(c) + " " + C.to_string();
        const std::size_t aC = aleph(C, none), aE = aleph(E, none);

        // Refinement: C ∨ E refines C.
        const Cover D = vee(C, E);
        const std::size_t aD = aleph(D, none);
        if (aC > aD) violation(r, tag + ": refinement lowered the count");
        // Product bound on the same pair.
        if (aD > aC * aE) violation(r, tag + ": product bound, " + std::to_string(aD) + " > " + std::to_string(aC * aE));
        // Inclusion: more elements never need more of them.
        if (aleph(with_spares(C, rng), none) > aC) violation(r, tag + ": a larger collection needed more elements");

        // Pullback on the whole (invariant) domain, off Δʲ.
        const PcMap& f = loaded[c % loaded.size()];
        for (int j = 1; j <= 2; ++j) {
            const std::size_t aj = aleph(pullback_cover(f, C, j), delta_n(f, j));
            if (aj > aC) violation(r, tag + ": pullback by " + maps[c % maps.size()] + " at j = " + std::to_string(j));
        }
        // Refinement carries over to Cⁿ on the tent.
        if (c % 20 == 0) {
            for (int n = 2; n <= 3; ++n) {
                const PointSet dn = delta_n(loaded[0], n);
                if (aleph(refine_n(loaded[0], C, n), dn) > aleph(refine_n(loaded[0], D, n), dn)) {
                    violation(r, tag + ": refinement lowered the tent count at n = " + std::to_string(n));
                }
            }
        }
    }
    if (inexact > 0) {
        r.note = std::to_string(inexact) + " subcover searches hit the node cap, first on " + first_inexact;
        r.complete = false;
    }
    return r;
}

SuiteReport check_cover_subadditivity(const PropertyConfig& cfg) {
    SuiteReport r;
    r.name = "subadditivity of log aleph(C^n) on tent";
    const PcMap tent = catalog_get("tent").map;
    std::vector<Cover> covers{natural_cover(tent)};
    for (const char* text : {"{(0, 0.55), (0.45, 1)}", "{(0, 0.3), (0.2, 0.7), (0.6, 1)}",
                             "{(0, 0.3)|(0.6, 0.8), (0.2, 0.7), (0.75, 1)}", "{(0, 0.4), (0.3, 0.62), (0.55, 1), (0.45, 0.5)}"}) {
        covers.push_back(parse_cover(text, tent.domain()));
    }
    const int n_max = 2 * cfg.subadditivity_n;
    for (const Cover& c : covers) {
        EntropySeries s = cover_entropy(tent, c, n_max);
        if (static_cast<int>(s.records.size()) < n_max) {
            r.complete = false;
            r.note = "cover " + c.to_string() + " stopped at n = " + std::to_string(s.records.size());
        }
        auto value = [&](int n) { return std::log(s.records[static_cast<std::size_t>(n - 1)].value); };
        for (int n = 1; n <= cfg.subadditivity_n; ++n) {
            for (int k = 1; k <= cfg.subadditivity_n && n + k <= static_cast<int>(s.records.size()); ++k) {
                ++r.cases;
                if (value(n + k) > value(n) + value(k) + 1e-12) {
                    violation(r, c.to_string() + " at n = " + std::to_string(n) + ", k = " + std::to_string(k));
                }
            }
        }
    }
    return r;
}

SuiteReport check_count_submultiplicativity(const PropertyConfig& cfg) {
    SuiteReport r;
    r.name = "submultiplicativity of c_n over the catalog";
    SymbolicOptions opt;
    opt.cap = cfg.count_cap;
    const int n_top = cfg.submultiplicative_sum - 1;
    for (const std::string& name : catalog_names()) {
        const PcMap m = catalog_get(name).map;
        std::vector<double> c;
        DeltaTower t(m, opt);
        try {
            for (int n = 1; n <= n_top; ++n) {
                t.advance();
                c.push_back(static_cast<double>(count_pieces_with(m, t.current(), n, opt).count()));
            }
        } catch (const ResourceCapExceeded&) {
            r.complete = false;
            r.note += name + " stopped at n = " + std::to_string(c.size()) + "; ";
        }
        for (std::size_t n = 1; n <= c.size(); ++n) {
            for (std::size_t k = 1; n + k <= c.size(); ++k) {
                ++r.cases;
                if (c[n + k - 1] > c[n - 1] * c[k - 1]) {
                    violation(r, name + " at n = " + std::to_string(n) + ", m = " + std::to_string(k));
                }
            }
        }
    }
    return r;
}

std::vector<SuiteReport> run_property_suites(const PropertyConfig& cfg) {
    return {check_openset_algebra(cfg), check_aleph_bounds(cfg), check_cover_subadditivity(cfg),
            check_count_submultiplicativity(cfg)};
}

}  // namespace pcent
