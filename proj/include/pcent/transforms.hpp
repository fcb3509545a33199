#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcent/error.hpp"
#include "pcent/interval.hpp"
#include "pcent/pcmap.hpp"
#include "pcent/symbolic.hpp"

namespace pcent {

/// Continuous piecewise-affine bijection between two compact intervals,
/// given by nodes with strictly increasing x and strictly monotone y.
class PlHomeo {
public:
    explicit PlHomeo(std::vector<std::pair<double, double>> nodes);
    static PlHomeo identity(const Interval& domain);

    const std::vector<std::pair<double, double>>& nodes() const { return nodes_; }
    bool increasing() const { return nodes_.back().second > nodes_.front().second; }
    Interval source() const { return Interval::closed(nodes_.front().first, nodes_.back().first); }
    Interval target() const;

    double operator()(double x) const;
    double inverse(double y) const;
    /// φ applied to arg, as an expression.
    Expr as_expr(const Expr& arg) const;
    Expr inverse_expr(const Expr& arg) const;

    std::string to_string() const;

private:
    std::vector<std::pair<double, double>> nodes_;
    std::vector<std::pair<double, double>> inverse_nodes_;  // sorted by y
};

/// Literal `[(x0,y0),(x1,y1),...]`.
PlHomeo parse_plhomeo(const std::string& text);

/// fᵏ: pieces are the components of X \ Δᵏ, branches the k-fold compositions
/// along each piece's itinerary. k = 0 gives the identity on X.
PcMap iterate_map(const PcMap& map, int k, const SymbolicOptions& opt = {});

/// g = φ ∘ f ∘ φ⁻¹ on φ(X). A decreasing φ reverses the piece order.
PcMap conjugate_map(const PcMap& map, const PlHomeo& phi);

struct InvarianceReport {
    bool pass = true;
    bool pseudo = false;             // passed only through one-sided limits at Δ
    std::optional<double> witness;   // a point whose image leaves the region
    std::string message;
};

/// Raised by restrict_map when the region is not (pseudo-)invariant.
class InvarianceError : public ValidationError {
public:
    InvarianceError(const std::string& what, double witness) : ValidationError(what), witness_(witness) {}
    double witness() const { return witness_; }

private:
    double witness_;
};

/// Grid check of forward invariance off Δ plus one-sided limits at Δ points in the region.
InvarianceReport check_invariance(const PcMap& map, const RegionSet& region, int grid = 10000, double tol = 1e-9);

/// A map together with a verified invariant region.
class RestrictedMap {
public:
    RestrictedMap(const PcMap& map, RegionSet region, InvarianceReport report)
        : map_(map), region_(std::move(region)), report_(std::move(report)) {}

    const PcMap& map() const { return map_; }
    const RegionSet& region() const { return region_; }
    const InvarianceReport& report() const { return report_; }

    /// For a single-interval region, the map restricted to it as a pc-map of its own.
    PcMap as_map() const;

private:
    PcMap map_;
    RegionSet region_;
    InvarianceReport report_;
};

/// Throws InvarianceError carrying a witness when the check fails.
RestrictedMap restrict_map(const PcMap& map, const RegionSet& region, int grid = 10000);

}  // namespace pcent
