#include <omp.h>

#include <algorithm>

#include "pcent/kernels.hpp"

namespace pcent::kernels::omp {

std::vector<double> preimage_level(const PcMap& map, std::span<const double> targets, double bisection_tol) {
    const auto count = static_cast<std::ptrdiff_t>(targets.size());
    std::vector<std::vector<double>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            for (const Branch& b : map.branches()) {
                if (auto x = branch_inverse(b, targets[static_cast<std::size_t>(i)], bisection_tol)) mine.push_back(*x);
            }
        }
    }
    std::vector<double> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint8_t> removable_junctions(const PcMap& map, std::span<const double> cuts, int n, double rel_tol) {
    std::vector<std::uint8_t> out(cuts.size(), 0);
    const auto count = static_cast<std::ptrdiff_t>(cuts.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = detail::junction_removable(map, cuts, static_cast<std::size_t>(i), n, rel_tol) ? 1 : 0;
    }
    return out;
}

OrbitTable orbit_table(const PcMap& map, std::span<const double> xs, int depth, const Chart& chart) {
    OrbitTable t;
    t.x.assign(xs.begin(), xs.end());
    t.depth = depth;
    t.coord.resize(t.x.size() * static_cast<std::size_t>(depth));
    t.code.resize(t.coord.size());
    const auto count = static_cast<std::ptrdiff_t>(t.x.size());
    constexpr std::ptrdiff_t block = 256;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < count; b += block) {
        detail::fill_orbit_rows(map, t, static_cast<std::size_t>(b), static_cast<std::size_t>(std::min(b + block, count)), chart);
    }
    return t;
}

std::vector<CellResult> bowen_cells(const OrbitTable& table, std::span<const BowenCell> cells) {
    std::vector<CellResult> out(cells.size());
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = bowen_cell(table, cells[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace pcent::kernels::omp
