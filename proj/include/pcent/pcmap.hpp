#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcent/expr.hpp"
#include "pcent/interval.hpp"

namespace pcent {

enum class Monotonicity { increasing, decreasing };
enum class DeltaConvention { left_limit, right_limit };

inline int sign_of(Monotonicity m) { return m == Monotonicity::increasing ? 1 : -1; }

/// One continuity piece with its monotone branch.
struct Branch {
    Interval piece;
    Expr expr;
    Monotonicity monotonicity = Monotonicity::increasing;

    /// Value of the continuous extension of the branch at x (x may be a piece end).
    double value(double x) const { return expr.eval(x); }
};

struct ValidationOptions {
    int grid = 1000;
    double image_tol = 1e-9;
    bool check_monotone = true;
};

/// A piecewise continuous, piecewise strictly monotone map of a compact interval.
class PcMap {
public:
    /// Builds and validates. Piece open/closed flags are normalised: the first
    /// piece is closed at the domain's left end, the last at the right end.
    PcMap(Interval domain, std::vector<Branch> branches, DeltaConvention convention = DeltaConvention::left_limit,
          ValidationOptions options = {});

    const Interval& domain() const { return domain_; }
    const std::vector<Branch>& branches() const { return branches_; }
    const Branch& branch(std::size_t i) const { return branches_[i]; }
    std::size_t piece_count() const { return branches_.size(); }
    const PointSet& delta() const { return delta_; }
    DeltaConvention convention() const { return convention_; }
    PcMap with_convention(DeltaConvention c) const;

    /// Branch used at x: the piece containing x, or at a Δ point the side picked
    /// by the convention. x must already lie in the domain.
    std::size_t piece_index(double x) const;

    /// f(x). Points within 1e-9 outside the domain are clamped; others throw.
    double evaluate(double x) const;
    /// [x, f(x), ..., f^{n-1}(x)]
    std::vector<double> orbit(double x, int n) const;
    /// True iff f^j(x) stays off Δ (within tol) for 0 <= j < horizon.
    bool orbit_avoids_delta(double x, int horizon, double tol = 1e-10) const;

    /// Map-definition text accepted by parse_map.
    std::string to_text() const;

private:
    double clamp_to_domain(double x) const;

    Interval domain_;
    std::vector<Branch> branches_;
    PointSet delta_;
    DeltaConvention convention_;
};

/// Parses the map-definition format:
///   domain = [lo, hi]
///   at_delta = left|right        (optional)
///   piece (a, b): <expr> inc|dec (one per piece, left to right)
PcMap parse_map(std::string_view source);

/// Preimage of y under the continuous extension of the branch to the closure of
/// its piece. Absent when y lies outside the closed image.
std::optional<double> branch_inverse(const Branch& branch, double y, double tol = 1e-14);

}  // namespace pcent
