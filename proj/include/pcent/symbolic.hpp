#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcent/interval.hpp"
#include "pcent/pcmap.hpp"
#include "pcent/series.hpp"

namespace pcent {

/// Δⁿ size limit; PCENTROPY_CAP overrides the default of 2,000,000.
std::size_t default_point_cap();

struct SymbolicOptions {
    double merge_tol = 1e-10;
    double bisection_tol = 1e-14;
    double junction_tol = 1e-9;  // relative to diam X
    std::size_t cap = default_point_cap();
    bool parallel = true;
};

/// All x whose branch limit equals some target, merged within merge_tol.
PointSet preimage_set(const PcMap& map, const PointSet& targets, const SymbolicOptions& opt = {});

/// Builds Δ⁰ ⊆ Δ¹ ⊆ ... one level at a time from backward preimages of Δ.
class DeltaTower {
public:
    explicit DeltaTower(const PcMap& map, SymbolicOptions opt = {});
    DeltaTower(PcMap&&, SymbolicOptions = {}) = delete;  // keeps a pointer to the map

    int depth() const { return depth_; }
    const PointSet& current() const { return current_; }  // Δ^depth
    /// Moves to Δ^{depth+1}. Throws ResourceCapExceeded and leaves the tower unchanged.
    void advance();

private:
    const PcMap* map_;
    SymbolicOptions opt_;
    int depth_ = 0;
    PointSet level_;
    PointSet current_;
};

PointSet delta_n(const PcMap& map, int n, const SymbolicOptions& opt = {});

struct PieceCount {
    std::size_t components = 0;  // components of X \ Δⁿ
    std::size_t removable = 0;   // cuts where fⁿ continues monotonically
    std::size_t count() const { return components - removable; }
};

/// Piece count for a precomputed Δⁿ.
PieceCount count_pieces_with(const PcMap& map, const PointSet& delta_n, int n, const SymbolicOptions& opt = {});
std::size_t count_pieces(const PcMap& map, int n, const SymbolicOptions& opt = {});

/// Records (n, c_n) for n = 1..n_max. Stops early, flagged truncated, at the cap.
/// Each record's flag carries the pre-merge component count when it differs.
EntropySeries ms_entropy(const PcMap& map, int n_max, Estimator estimator = Estimator::slope_fit,
                         const SymbolicOptions& opt = {});

struct FullBranchRow {
    int n = 0;
    std::size_t delta_count = 0;
    double expected_delta = 0;  // Nⁿ − 1
    std::size_t pieces = 0;
};

struct FullBranchReport {
    bool precondition_ok = true;
    std::string precondition;  // why the precondition failed
    bool pass = false;
    std::vector<FullBranchRow> rows;
    std::string failure;       // first failing check
};

/// Checks #Δⁿ = Nⁿ − 1 and |c_n − #Δⁿ| <= 1 for maps whose branches are all onto X
/// and whose Δ has no connections up to n_max.
FullBranchReport full_branch_check(const PcMap& map, int n_max, const SymbolicOptions& opt = {});

}  // namespace pcent
