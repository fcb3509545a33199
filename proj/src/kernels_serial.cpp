#include <algorithm>
#include <cmath>

#include "pcent/kernels.hpp"

namespace pcent::kernels {

double OrbitTable::rho(std::size_t a, std::size_t b, int n) const {
    const double* pa = &coord[a * static_cast<std::size_t>(depth)];
    const double* pb = &coord[b * static_cast<std::size_t>(depth)];
    double r = 0;
    for (int j = 0; j < n; ++j) r = std::max(r, std::abs(pa[j] - pb[j]));
    return r;
}

bool OrbitTable::within(std::size_t a, std::size_t b, int n, double eps) const {
    const double* pa = &coord[a * static_cast<std::size_t>(depth)];
    const double* pb = &coord[b * static_cast<std::size_t>(depth)];
    for (int j = 0; j < n; ++j) {
        if (!(std::abs(pa[j] - pb[j]) < eps)) return false;
    }
    return true;
}

CellResult bowen_cell(const OrbitTable& t, const BowenCell& cell) {
    const std::size_t size = t.size();
    const int n = cell.n;
    const double eps = cell.eps;
    CellResult out;

    // Separated set: admit a sample when every admitted point is at rho_n >= eps.
    // The chart is monotone, so admitted points further left than eps in the
    // first coordinate are separated already.
    for (std::size_t i = 0; i < size; ++i) {
        bool ok = true;
        for (auto it = out.separated.rbegin(); it != out.separated.rend(); ++it) {
            if (!(std::abs(t.at(*it, 0) - t.at(i, 0)) < eps)) break;
            if (t.within(*it, i, n, eps)) {
                ok = false;
                break;
            }
        }
        if (ok) out.separated.push_back(i);
    }

    // Spanning sweep: the leftmost uncovered sample u picks the rightmost
    // center c with rho_n(u, c) < eps, then everything in that ball is covered.
    std::vector<std::uint8_t> covered(size, 0);
    std::size_t u = 0;
    while (u < size) {
        std::size_t c = u;
        for (std::size_t k = u + 1; k < size && std::abs(t.at(k, 0) - t.at(u, 0)) < eps; ++k) {
            if (t.within(u, k, n, eps)) c = k;
        }
        out.centers.push_back(c);
        for (std::size_t k = c; k-- > 0;) {
            if (!(std::abs(t.at(k, 0) - t.at(c, 0)) < eps)) break;
            if (!covered[k] && t.within(k, c, n, eps)) covered[k] = 1;
        }
        for (std::size_t k = c; k < size && std::abs(t.at(k, 0) - t.at(c, 0)) < eps; ++k) {
            if (!covered[k] && t.within(k, c, n, eps)) covered[k] = 1;
        }
        while (u < size && covered[u]) ++u;
    }

    for (std::size_t i = 0; i + 1 < size; ++i) {
        bool same = true;
        for (int j = 0; j < n && same; ++j) same = t.code_at(i, j) == t.code_at(i + 1, j);
        if (same) {
            out.max_gap = std::max(out.max_gap, t.rho(i, i + 1, n));
        } else {
            ++out.split_pairs;
        }
    }
    return out;
}

namespace detail {

bool junction_removable(const PcMap& map, std::span<const double> cuts, std::size_t i, int n, double rel_tol) {
    const Interval& dom = map.domain();
    const double left_lo = i == 0 ? dom.lo() : cuts[i - 1];
    const double right_hi = i + 1 == cuts.size() ? dom.hi() : cuts[i + 1];
    const double cut = cuts[i];

    // Follow the itinerary of each neighbour's midpoint, applying the same
    // branches to the cut point to get the one-sided limits of f^n there.
    double xl = 0.5 * (left_lo + cut), xr = 0.5 * (cut + right_hi);
    double yl = cut, yr = cut;
    int dir_l = 1, dir_r = 1;
    for (int j = 0; j < n; ++j) {
        const Branch& bl = map.branch(map.piece_index(xl));
        const Branch& br = map.branch(map.piece_index(xr));
        dir_l *= sign_of(bl.monotonicity);
        dir_r *= sign_of(br.monotonicity);
        xl = bl.value(xl);
        xr = br.value(xr);
        yl = bl.value(yl);
        yr = br.value(yr);
    }
    return dir_l == dir_r && std::abs(yl - yr) <= rel_tol * dom.diameter();
}

void fill_orbit_rows(const PcMap& map, OrbitTable& t, std::size_t begin, std::size_t end, const Chart& chart) {
    const auto depth = static_cast<std::size_t>(t.depth);
    const double lo = map.domain().lo(), hi = map.domain().hi();
    for (std::size_t i = begin; i < end; ++i) {
        double x = t.x[i];
        for (std::size_t j = 0; j < depth; ++j) {
            x = std::clamp(x, lo, hi);
            std::size_t k = map.piece_index(x);
            t.coord[i * depth + j] = chart ? chart(x) : x;
            t.code[i * depth + j] = static_cast<std::uint16_t>(k);
            x = map.branch(k).value(x);
        }
    }
}

}  // namespace detail

namespace serial {

std::vector<double> preimage_level(const PcMap& map, std::span<const double> targets, double bisection_tol) {
    std::vector<double> out;
    out.reserve(targets.size() * map.piece_count());
    for (double y : targets) {
        for (const Branch& b : map.branches()) {
            if (auto x = branch_inverse(b, y, bisection_tol)) out.push_back(*x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint8_t> removable_junctions(const PcMap& map, std::span<const double> cuts, int n, double rel_tol) {
    std::vector<std::uint8_t> out(cuts.size(), 0);
    for (std::size_t i = 0; i < cuts.size(); ++i) out[i] = detail::junction_removable(map, cuts, i, n, rel_tol) ? 1 : 0;
    return out;
}

OrbitTable orbit_table(const PcMap& map, std::span<const double> xs, int depth, const Chart& chart) {
    OrbitTable t;
    t.x.assign(xs.begin(), xs.end());
    t.depth = depth;
    t.coord.resize(t.x.size() * static_cast<std::size_t>(depth));
    t.code.resize(t.coord.size());
    detail::fill_orbit_rows(map, t, 0, t.x.size(), chart);
    return t;
}

std::vector<CellResult> bowen_cells(const OrbitTable& table, std::span<const BowenCell> cells) {
    std::vector<CellResult> out;
    out.reserve(cells.size());
    for (const BowenCell& c : cells) out.push_back(bowen_cell(table, c));
    return out;
}

}  // namespace serial

}  // namespace pcent::kernels
