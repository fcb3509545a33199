#pragma once

// Hot loops, each in a serial reference form and an OpenMP form.
// Both forms return identical results; tests compare them element by element.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pcent/pcmap.hpp"

namespace pcent::kernels {

/// Coordinate change applied to orbit points before measuring distances.
/// Empty means the identity. Must be monotone.
using Chart = std::function<double(double)>;

/// Orbits of a sorted sample, stored row-major: entry (i, j) is f^j(x_i).
struct OrbitTable {
    std::vector<double> x;
    int depth = 0;
    std::vector<double> coord;          // chart(f^j(x_i))
    std::vector<std::uint16_t> code;    // piece index of f^j(x_i)

    std::size_t size() const { return x.size(); }
    double at(std::size_t i, int j) const { return coord[i * static_cast<std::size_t>(depth) + static_cast<std::size_t>(j)]; }
    std::uint16_t code_at(std::size_t i, int j) const {
        return code[i * static_cast<std::size_t>(depth) + static_cast<std::size_t>(j)];
    }
    /// max_{j<n} |chart f^j(x_a) - chart f^j(x_b)|
    double rho(std::size_t a, std::size_t b, int n) const;
    /// True when rho(a, b, n) < eps, stopping at the first coordinate that fails.
    bool within(std::size_t a, std::size_t b, int n, double eps) const;
};

struct BowenCell {
    int n = 1;
    double eps = 0;
};

struct CellResult {
    std::vector<std::size_t> separated;  // indices of the greedy separated set
    std::vector<std::size_t> centers;    // indices of the greedy spanning centers
    /// Largest rho_n between neighbouring samples that share a depth-n itinerary.
    double max_gap = 0;
    /// Neighbouring samples whose depth-n itineraries differ.
    std::size_t split_pairs = 0;
};

/// Greedy left-to-right separated set, greedy spanning sweep and resolution gap
/// for one cell. Shared by both kernel forms.
CellResult bowen_cell(const OrbitTable& table, const BowenCell& cell);

namespace serial {

/// Preimages of every target under every branch, sorted (not merged).
std::vector<double> preimage_level(const PcMap& map, std::span<const double> targets, double bisection_tol);

/// For sorted interior cuts of X into components, flags each cut at which f^n
/// extends continuously and keeps its monotone direction.
std::vector<std::uint8_t> removable_junctions(const PcMap& map, std::span<const double> cuts, int n, double rel_tol);

OrbitTable orbit_table(const PcMap& map, std::span<const double> xs, int depth, const Chart& chart = {});

std::vector<CellResult> bowen_cells(const OrbitTable& table, std::span<const BowenCell> cells);

}  // namespace serial

namespace omp {

std::vector<double> preimage_level(const PcMap& map, std::span<const double> targets, double bisection_tol);
std::vector<std::uint8_t> removable_junctions(const PcMap& map, std::span<const double> cuts, int n, double rel_tol);
OrbitTable orbit_table(const PcMap& map, std::span<const double> xs, int depth, const Chart& chart = {});
std::vector<CellResult> bowen_cells(const OrbitTable& table, std::span<const BowenCell> cells);

}  // namespace omp

namespace detail {

/// Junction test at cuts[i], between components i and i+1.
bool junction_removable(const PcMap& map, std::span<const double> cuts, std::size_t i, int n, double rel_tol);

/// Fills rows [begin, end) of an orbit table whose x and depth are set.
void fill_orbit_rows(const PcMap& map, OrbitTable& table, std::size_t begin, std::size_t end, const Chart& chart);

}  // namespace detail

}  // namespace pcent::kernels
