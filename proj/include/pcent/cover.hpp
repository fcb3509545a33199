#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pcent/interval.hpp"
#include "pcent/pcmap.hpp"
#include "pcent/series.hpp"
#include "pcent/symbolic.hpp"

namespace pcent {

/// Labeled collection of non-empty relatively open sets of the domain.
struct Cover {
    std::vector<OpenSet> elements;
    std::string label;

    std::size_t size() const { return elements.size(); }
    std::string to_string() const;
};

/// Cover literal `{(a,b), (c,d)|(e,f), ...}`; `|` joins intervals into one
/// element. Parts are clipped to the domain and become closed at a domain end
/// they reach, so they are open relative to the domain.
Cover parse_cover(const std::string& text, const Interval& domain);

/// One element per continuity piece.
Cover natural_cover(const PcMap& map);

/// All non-empty intersections of one element from each factor. Repeated
/// elements are kept once.
Cover vee(std::span<const Cover> covers);
Cover vee(const Cover& a, const Cover& b);

/// Each element with the given points removed.
Cover subtract_points(const Cover& c, const PointSet& points);

/// f^{-j} of every element, computed branch by branch off Δ; empty preimages dropped.
Cover pullback_cover(const PcMap& map, const Cover& cover, int j, std::size_t cap = default_point_cap());

/// Cⁿ = ∨_{j<n} f^{-j}(C \ Δ).
Cover refine_n(const PcMap& map, const Cover& cover, int n, std::size_t cap = default_point_cap());

struct SubcoverOptions {
    double snap_tol = 1e-9;
    std::size_t node_cap = 1'000'000;
};

struct SubcoverResult {
    std::size_t cardinality = 0;
    bool exact = true;               // false when branch-and-bound hit the node cap
    std::vector<std::size_t> chosen; // indices into the cover
};

/// Smallest number of elements whose union contains target \ exclude.
/// Throws NotACover with an uncovered point.
SubcoverResult minimal_subcover(const Cover& cover, const RegionSet& target, const PointSet& exclude,
                                const SubcoverOptions& opt = {});
std::size_t minimal_subcover_cardinality(const Cover& cover, const RegionSet& target, const PointSet& exclude,
                                         const SubcoverOptions& opt = {});

struct CoverOptions {
    SymbolicOptions symbolic;
    SubcoverOptions subcover;
    /// Restricts targets to this region when not empty.
    RegionSet region;
};

/// Records (n, ℵ(Cⁿ) over target \ Δⁿ). A record flagged "inexact" holds a greedy upper bound.
EntropySeries cover_entropy(const PcMap& map, const Cover& cover, int n_max, Estimator estimator = Estimator::fekete_min,
                            const CoverOptions& opt = {});

/// Interval endpoints of the refined natural cover lying inside the domain.
PointSet boundary_of_refined_natural_cover(const PcMap& map, int n, double merge_tol = 1e-10);

/// Conservative Lebesgue number: min over a grid of the best slack any element leaves.
double lebesgue_number(const Cover& cover, const Interval& domain, int grid = 1000);

}  // namespace pcent
