#include "pcent/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "pcent/format.hpp"

namespace pcent {

PlHomeo::PlHomeo(std::vector<std::pair<double, double>> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw ValidationError("homeomorphism needs at least two nodes");
    const bool inc = nodes_[1].second > nodes_[0].second;
    for (std::size_t k = 1; k < nodes_.size(); ++k) {
        if (!(nodes_[k].first > nodes_[k - 1].first)) throw ValidationError("homeomorphism nodes must have increasing x");
        double dy = nodes_[k].second - nodes_[k - 1].second;
        if (!(inc ? dy > 0 : dy < 0)) throw ValidationError("homeomorphism is not strictly monotone at node " + std::to_string(k));
    }
    for (const auto& [x, y] : nodes_) inverse_nodes_.emplace_back(y, x);
    std::sort(inverse_nodes_.begin(), inverse_nodes_.end());
}

PlHomeo PlHomeo::identity(const Interval& domain) { return PlHomeo({{domain.lo(), domain.lo()}, {domain.hi(), domain.hi()}}); }

Interval PlHomeo::target() const {
    return Interval::closed(inverse_nodes_.front().first, inverse_nodes_.back().first);
}

namespace {

double interpolate(const std::vector<std::pair<double, double>>& nodes, double t) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t, [](double v, const auto& p) { return v < p.first; });
    std::size_t k = it == nodes.begin() ? 0 : std::min<std::size_t>(static_cast<std::size_t>(it - nodes.begin()) - 1, nodes.size() - 2);
    const auto& [x0, y0] = nodes[k];
    const auto& [x1, y1] = nodes[k + 1];
    if (t == x0) return y0;
    if (t == x1) return y1;
    return y0 + (y1 - y0) / (x1 - x0) * (t - x0);
}

}  // namespace

double PlHomeo::operator()(double x) const { return interpolate(nodes_, x); }
double PlHomeo::inverse(double y) const { return interpolate(inverse_nodes_, y); }
Expr PlHomeo::as_expr(const Expr& arg) const { return Expr::pwl(nodes_, arg); }
Expr PlHomeo::inverse_expr(const Expr& arg) const { return Expr::pwl(inverse_nodes_, arg); }

std::string PlHomeo::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (k) s += ",";
        s += "(" + format_real(nodes_[k].first) + "," + format_real(nodes_[k].second) + ")";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------

PcMap iterate_map(const PcMap& map, int k, const SymbolicOptions& opt) {
    if (k < 0) throw std::invalid_argument("iterate_map needs k >= 0");
    ValidationOptions constructed;
    constructed.check_monotone = false;
    if (k == 0) {
        return PcMap(map.domain(), {Branch{map.domain(), Expr::variable(), Monotonicity::increasing}}, map.convention(),
                     constructed);
    }
    const PointSet dk = delta_n(map, k, opt);
    const auto comps = components_of_complement(map.domain(), dk);
    std::vector<Branch> branches;
    branches.reserve(comps.size());
    for (const Interval& c : comps) {
        double x = c.midpoint();
        Expr g = Expr::variable();
        int sign = 1;
        for (int j = 0; j < k; ++j) {
            const Branch& b = map.branch(map.piece_index(x));
            g = b.expr.compose(g);
            sign *= sign_of(b.monotonicity);
            x = b.value(x);
        }
        branches.push_back(Branch{Interval::open(c.lo(), c.hi()), g,
                                  sign > 0 ? Monotonicity::increasing : Monotonicity::decreasing});
    }
    return PcMap(map.domain(), std::move(branches), map.convention(), constructed);
}

PcMap conjugate_map(const PcMap& map, const PlHomeo& phi) {
    const Interval& X = map.domain();
    const Interval src = phi.source();
    if (src.lo() != X.lo() || src.hi() != X.hi()) {
        throw ValidationError("homeomorphism is defined on " + src.to_string() + ", not on the domain " + X.to_string());
    }
    const Expr inv = phi.inverse_expr(Expr::variable());
    std::vector<Branch> branches;
    for (const Branch& b : map.branches()) {
        double a = phi(b.piece.lo()), c = phi(b.piece.hi());
        if (a > c) std::swap(a, c);
        Expr g = phi.as_expr(b.expr.compose(inv));
        branches.push_back(Branch{Interval::open(a, c), g, b.monotonicity});
    }
    if (!phi.increasing()) std::reverse(branches.begin(), branches.end());
    // Δ values under a decreasing φ swap sides, so the convention flips too.
    DeltaConvention conv = map.convention();
    if (!phi.increasing()) {
        conv = conv == DeltaConvention::left_limit ? DeltaConvention::right_limit : DeltaConvention::left_limit;
    }
    ValidationOptions constructed;
    constructed.check_monotone = false;
    return PcMap(phi.target(), std::move(branches), conv, constructed);
}

// ---------------------------------------------------------------------------

InvarianceReport check_invariance(const PcMap& map, const RegionSet& region, int grid, double tol) {
    InvarianceReport rep;
    const auto delta = map.delta().points();
    auto is_delta = [&](double x) { return std::binary_search(delta.begin(), delta.end(), x); };
    const double lo = map.domain().lo(), hi = map.domain().hi();

    for (const Interval& part : region.parts()) {
        if (part.lo() < lo - tol || part.hi() > hi + tol) {
            rep.pass = false;
            rep.witness = part.lo() < lo ? part.lo() : part.hi();
            rep.message = "region part " + part.to_string() + " leaves the domain";
            return rep;
        }
        const int g = part.is_point() ? 1 : std::max(grid, 2);
        for (int k = 0; k < g; ++k) {
            double x = g == 1 ? part.lo() : (k + 1 == g ? part.hi() : part.lo() + part.diameter() * k / (g - 1));
            if (is_delta(x)) continue;
            double y = map.evaluate(x);
            if (!region.contains(y, tol)) {
                rep.pass = false;
                rep.witness = x;
                rep.message = "f(" + format_real(x) + ") = " + format_real(y) + " leaves the region";
                return rep;
            }
        }
        for (std::size_t i = 0; i + 1 < map.piece_count(); ++i) {
            const double d = map.branch(i).piece.hi();
            if (d < part.lo() || d > part.hi()) continue;
            // One-sided limits from the sides that lie in the region.
            const double left = map.branch(i).value(d), right = map.branch(i + 1).value(d);
            if (d > part.lo() && !region.contains(left, tol)) {
                rep.pass = false;
                rep.witness = d;
                rep.message = "left limit of f at " + format_real(d) + " is " + format_real(left) + ", outside the region";
                return rep;
            }
            if (d < part.hi() && !region.contains(right, tol)) {
                rep.pass = false;
                rep.witness = d;
                rep.message = "right limit of f at " + format_real(d) + " is " + format_real(right) + ", outside the region";
                return rep;
            }
            if (!region.contains(map.evaluate(d), tol)) rep.pseudo = true;
        }
    }
    rep.message = rep.pseudo ? "pseudo-invariant" : "invariant";
    return rep;
}

RestrictedMap restrict_map(const PcMap& map, const RegionSet& region, int grid) {
    if (region.empty()) throw ValidationError("empty region");
    InvarianceReport rep = check_invariance(map, region, grid);
    if (!rep.pass) throw InvarianceError("region " + region.to_string() + " is not invariant: " + rep.message, *rep.witness);
    return RestrictedMap(map, region, std::move(rep));
}

PcMap RestrictedMap::as_map() const {
    if (region_.parts().size() != 1) throw ValidationError("only a single-interval region restricts to a pc-map");
    const Interval& R = region_.parts()[0];
    if (R.is_point()) throw ValidationError("region has empty interior");
    std::vector<Branch> branches;
    for (const Branch& b : map_.branches()) {
        double a = std::max(b.piece.lo(), R.lo()), c = std::min(b.piece.hi(), R.hi());
        if (a < c) branches.push_back(Branch{Interval::open(a, c), b.expr, b.monotonicity});
    }
    return PcMap(R, std::move(branches), map_.convention());
}

}  // namespace pcent
