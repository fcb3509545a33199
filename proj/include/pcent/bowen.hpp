#pragma once

#include <string>
#include <vector>

#include "pcent/interval.hpp"
#include "pcent/kernels.hpp"
#include "pcent/pcmap.hpp"
#include "pcent/series.hpp"

namespace pcent {

/// Finite stand-in for the points of a region whose orbits avoid Δ.
struct SampleSet {
    std::vector<double> points;  // sorted
    int horizon = 1;
    RegionSet region;
    double density = 0;          // largest gap between neighbours in one region part
    std::size_t nudged = 0;
    std::size_t dropped = 0;
    int balanced_depth = 0;      // depth used by equidistributed_sample, 0 for a plain grid
};

/// max_{j<n} |f^j(x) − f^j(y)|
double rho_n(const PcMap& map, double x, double y, int n);

/// Uniform grid over the region. Points whose orbit meets Δ before the horizon
/// are moved by fractions of the grid step, or dropped.
SampleSet sample_region(const PcMap& map, const RegionSet& region, int grid, int horizon);

struct BowenOptions {
    kernels::Chart chart;          // distances measured through this monotone map
    bool parallel = true;
    double resolution_factor = 0.25;
    /// A cell also needs at least this many samples per itinerary class on average.
    double min_samples_per_piece = 4;
    int min_resolved_cells = 3;
    /// Samples are drawn from a uniform grid this many times finer, spaced evenly
    /// in accumulated orbit displacement. 1 keeps the plain uniform grid.
    int refine_factor = 8;
};

/// `grid` points picked from a finer uniform sample so that neighbouring pairs carry
/// about the same orbit displacement over the first D steps, for the largest D at
/// which that displacement stays below target_gap.
SampleSet equidistributed_sample(const PcMap& map, const RegionSet& region, int grid, int horizon, double target_gap,
                                 const BowenOptions& opt = {});

/// Size of the greedy left-to-right (n, ε)-separated subset of the sample,
/// checked pairwise before it is returned.
std::size_t max_separated(const PcMap& map, const SampleSet& sample, int n, double eps, const BowenOptions& opt = {});

/// Size of a certified (n, ε)-spanning subset of the sample from the greedy ball sweep.
std::size_t min_spanning(const PcMap& map, const SampleSet& sample, int n, double eps, const BowenOptions& opt = {});

struct BowenCellRecord {
    int n = 0;
    double eps = 0;
    std::size_t separated = 0;
    std::size_t spanning = 0;
    std::size_t spanning_half = 0;  // spanning count at eps / 2
    double max_gap = 0;
    std::size_t split_pairs = 0;
    bool resolved = true;           // neighbouring samples stay closer than resolution_factor * eps
};

struct EpsRow {
    double eps = 0;
    double separated_slope = 0;
    double spanning_slope = 0;
    int resolved_cells = 0;
    int deepest_resolved = 0;       // largest n among resolved cells
    bool coarse = false;            // sample density above eps / 4
};

struct BowenResult {
    EntropySeries separated;
    EntropySeries spanning;
    std::vector<BowenCellRecord> cells;
    std::vector<EpsRow> table;
    double estimate_eps = 0;        // eps of the separated estimate
    double spanning_eps = 0;        // eps of the spanning estimate
    bool sandwich_ok = true;
    std::string sandwich_witness;
    SampleSet sample;
};

/// For each eps, slopes of log s_n and log r_n over the resolved cells of n_range.
/// Each reported estimate is the largest slope among eps rows with at least
/// min_resolved_cells resolved cells.
BowenResult bowen_entropy(const PcMap& map, const RegionSet& region, const std::vector<int>& n_range,
                          const std::vector<double>& eps_schedule, int grid, const BowenOptions& opt = {});

}  // namespace pcent
