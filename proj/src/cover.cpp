#include "pcent/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcent/error.hpp"

namespace pcent {

namespace {

bool part_order(const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    if (a.hi() != b.hi()) return a.hi() < b.hi();
    if (a.lo_open() != b.lo_open()) return a.lo_open() < b.lo_open();
    return a.hi_open() < b.hi_open();
}

bool set_order(const OpenSet& a, const OpenSet& b) {
    auto pa = a.parts(), pb = b.parts();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end(), part_order);
}

void dedupe(std::vector<OpenSet>& v) {
    std::sort(v.begin(), v.end(), set_order);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Preimage of u under every branch, each branch restricted to its own piece.
OpenSet pullback_once(const PcMap& map, const OpenSet& u) {
    std::vector<Interval> out;
    for (const Branch& b : map.branches()) {
        const Interval& P = b.piece;
        const double ya = b.value(P.lo()), yb = b.value(P.hi());
        const bool inc = ya < yb;
        const Interval image = inc ? Interval(ya, yb, P.lo_open(), P.hi_open()) : Interval(yb, ya, P.hi_open(), P.lo_open());
        for (const Interval& part : u.parts()) {
            if (part.hi() < image.lo() || part.lo() > image.hi()) continue;
            auto J = intersect(part, image);
            if (!J) continue;
            auto x1 = branch_inverse(b, J->lo());
            auto x2 = branch_inverse(b, J->hi());
            if (!x1 || !x2) continue;
            double lo = inc ? *x1 : *x2, hi = inc ? *x2 : *x1;
            bool lo_open = inc ? J->lo_open() : J->hi_open();
            bool hi_open = inc ? J->hi_open() : J->lo_open();
            lo = std::clamp(lo, P.lo(), P.hi());
            hi = std::clamp(hi, P.lo(), P.hi());
            if (lo < hi) {
                out.emplace_back(lo, hi, lo_open, hi_open);
            } else if (lo == hi && !lo_open && !hi_open) {
                out.push_back(Interval::point(lo));
            }
        }
    }
    return OpenSet(std::move(out));
}

Cover pullback_step(const PcMap& map, const Cover& c, std::size_t cap) {
    Cover out;
    out.label = c.label;
    std::size_t parts = 0;
    for (const OpenSet& e : c.elements) {
        OpenSet p = pullback_once(map, e);
        if (p.empty()) continue;
        parts += p.size();
        if (parts > cap) throw ResourceCapExceeded("pulled-back cover grows too large", cap);
        out.elements.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::string Cover::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) s += ", ";
        s += elements[i].to_string();
    }
    return s + "}";
}

Cover natural_cover(const PcMap& map) {
    Cover c;
    c.label = "natural";
    for (const Branch& b : map.branches()) c.elements.emplace_back(b.piece);
    return c;
}

Cover vee(const Cover& a, const Cover& b) {
    Cover out;
    out.label = a.label + "∨" + b.label;
    for (const OpenSet& x : a.elements) {
        for (const OpenSet& y : b.elements) {
            if (x.parts().back().hi() < y.parts().front().lo() || y.parts().back().hi() < x.parts().front().lo()) continue;
            OpenSet z = openset_intersect(x, y);
            if (!z.empty()) out.elements.push_back(std::move(z));
        }
    }
    dedupe(out.elements);
    return out;
}

Cover vee(std::span<const Cover> covers) {
    if (covers.empty()) throw std::invalid_argument("vee needs at least one cover");
    Cover acc = covers[0];
    for (std::size_t i = 1; i < covers.size(); ++i) acc = vee(acc, covers[i]);
    return acc;
}

Cover subtract_points(const Cover& c, const PointSet& points) {
    Cover out;
    out.label = c.label;
    for (const OpenSet& e : c.elements) {
        OpenSet r = openset_subtract_points(e, points);
        if (!r.empty()) out.elements.push_back(std::move(r));
    }
    return out;
}

Cover pullback_cover(const PcMap& map, const Cover& cover, int j, std::size_t cap) {
    if (j < 0) throw std::invalid_argument("pullback_cover needs j >= 0");
    Cover c = cover;
    for (int k = 0; k < j; ++k) c = pullback_step(map, c, cap);
    return c;
}

Cover refine_n(const PcMap& map, const Cover& cover, int n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("refine_n needs n >= 1");
    // C^{k+1} = (C \ Δ) ∨ f^{-1}(C^k)
    const Cover base = subtract_points(cover, map.delta());
    Cover c = base;
    for (int k = 1; k < n; ++k) {
        c = vee(base, pullback_step(map, c, cap));
        if (c.size() > cap) throw ResourceCapExceeded("refined cover grows too large", cap);
    }
    c.label = cover.label + "^" + std::to_string(n);
    return c;
}

EntropySeries cover_entropy(const PcMap& map, const Cover& cover, int n_max, Estimator estimator, const CoverOptions& opt) {
    if (n_max < 2) throw std::invalid_argument("cover_entropy needs n_max >= 2");
    EntropySeries s;
    s.method = Method::cover;
    s.estimator = estimator;
    const RegionSet target = opt.region.empty() ? RegionSet(map.domain()) : opt.region;
    const Cover base = subtract_points(cover, map.delta());
    DeltaTower tower(map, opt.symbolic);
    Cover c = base;
    for (int n = 1; n <= n_max; ++n) {
        try {
            tower.advance();
            if (n > 1) c = vee(base, pullback_step(map, c, opt.symbolic.cap));
            if (c.size() > opt.symbolic.cap) throw ResourceCapExceeded("refined cover grows too large", opt.symbolic.cap);
        } catch (const ResourceCapExceeded& e) {
            s.truncated = true;
            s.note = e.what();
            break;
        }
        SubcoverResult r = minimal_subcover(c, target, tower.current(), opt.subcover);
        SeriesRecord rec;
        rec.n = n;
        rec.value = static_cast<double>(r.cardinality);
        if (!r.exact) rec.flag = "inexact";
        s.records.push_back(std::move(rec));
    }
    try {
        s.estimate = estimate_entropy(s.log_records(), estimator);
    } catch (const std::exception& e) {
        s.estimate = std::numeric_limits<double>::quiet_NaN();
        if (s.note.empty()) s.note = e.what();
    }
    return s;
}

PointSet boundary_of_refined_natural_cover(const PcMap& map, int n, double merge_tol) {
    Cover c = refine_n(map, natural_cover(map), n);
    const double lo = map.domain().lo(), hi = map.domain().hi();
    std::vector<double> pts;
    for (const OpenSet& e : c.elements) {
        for (const Interval& p : e.parts()) {
            if (p.lo() > lo && p.lo() < hi) pts.push_back(p.lo());
            if (p.hi() > lo && p.hi() < hi) pts.push_back(p.hi());
        }
    }
    return PointSet(std::move(pts), merge_tol);
}

double lebesgue_number(const Cover& cover, const Interval& domain, int grid) {
    const double inf = std::numeric_limits<double>::infinity();
    double delta = inf;
    for (int k = 0; k < grid; ++k) {
        double x = domain.lo() + domain.diameter() * k / (grid - 1);
        double best = 0;
        for (const OpenSet& e : cover.elements) {
            for (const Interval& p : e.parts()) {
                if (!p.contains(x)) continue;
                // A closed end at the domain boundary leaves unlimited room on that side.
                double left = !p.lo_open() && p.lo() <= domain.lo() ? inf : x - p.lo();
                double right = !p.hi_open() && p.hi() >= domain.hi() ? inf : p.hi() - x;
                best = std::max(best, std::min(left, right));
            }
        }
        delta = std::min(delta, best);
    }
    return std::isinf(delta) ? domain.diameter() : delta;
}

}  // namespace pcent
