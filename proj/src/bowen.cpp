#include "pcent/bowen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pcent/error.hpp"
#include "pcent/format.hpp"

namespace pcent {

namespace {

kernels::OrbitTable make_table(const PcMap& map, const SampleSet& sample, int depth, const BowenOptions& opt) {
    if (depth > sample.horizon) throw std::invalid_argument("n exceeds the sample horizon");
    return opt.parallel ? kernels::omp::orbit_table(map, sample.points, depth, opt.chart)
                        : kernels::serial::orbit_table(map, sample.points, depth, opt.chart);
}

// Every pair in the set is at rho_n >= eps. Pairs further apart than eps in the
// first coordinate need no check.
void certify_separated(const kernels::OrbitTable& t, const std::vector<std::size_t>& set, int n, double eps) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (!(std::abs(t.at(set[a], 0) - t.at(set[b], 0)) < eps)) break;
            if (t.within(set[a], set[b], n, eps)) {
                throw std::logic_error("separated set certificate failed at x = " + format_real(t.x[set[a]]));
            }
        }
    }
}

// Every sample lies within rho_n < eps of some center.
void certify_spanning(const kernels::OrbitTable& t, const std::vector<std::size_t>& centers, int n, double eps) {
    std::vector<std::size_t> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), i);
        bool ok = false;
        for (auto r = it; r != sorted.end() && !ok; ++r) {
            if (!(std::abs(t.at(*r, 0) - t.at(i, 0)) < eps)) break;
            ok = t.within(*r, i, n, eps);
        }
        for (auto l = it; l != sorted.begin() && !ok;) {
            --l;
            if (!(std::abs(t.at(*l, 0) - t.at(i, 0)) < eps)) break;
            ok = t.within(*l, i, n, eps);
        }
        if (!ok) throw std::logic_error("spanning certificate failed at x = " + format_real(t.x[i]));
    }
}

// The smaller of the sweep's centers and the separated set, which is itself
// spanning because it is maximal.
const std::vector<std::size_t>& spanning_witness(const kernels::CellResult& c) {
    return c.centers.size() <= c.separated.size() ? c.centers : c.separated;
}

std::vector<kernels::CellResult> run_cells(const kernels::OrbitTable& t, const std::vector<kernels::BowenCell>& cells,
                                           bool parallel) {
    return parallel ? kernels::omp::bowen_cells(t, cells) : kernels::serial::bowen_cells(t, cells);
}

}  // namespace

double rho_n(const PcMap& map, double x, double y, int n) {
    if (n < 1) throw std::invalid_argument("rho_n needs n >= 1");
    auto ox = map.orbit(x, n), oy = map.orbit(y, n);
    double r = 0;
    for (int j = 0; j < n; ++j) r = std::max(r, std::abs(ox[static_cast<std::size_t>(j)] - oy[static_cast<std::size_t>(j)]));
    return r;
}

SampleSet sample_region(const PcMap& map, const RegionSet& region, int grid, int horizon) {
    if (grid < 2) throw std::invalid_argument("sample grid needs at least 2 points");
    if (horizon < 1) throw std::invalid_argument("sample horizon needs to be at least 1");
    SampleSet s;
    s.horizon = horizon;
    s.region = region;

    double total = 0;
    for (const Interval& p : region.parts()) total += p.diameter();
    for (const Interval& p : region.parts()) {
        int g = total > 0 ? std::max(2, static_cast<int>(std::lround(grid * p.diameter() / total))) : 1;
        if (p.is_point()) g = 1;
        const double h = g > 1 ? p.diameter() / (g - 1) : 0;
        std::vector<double> kept;
        for (int k = 0; k < g; ++k) {
            double x = k + 1 == g ? p.hi() : p.lo() + h * k;
            if (map.orbit_avoids_delta(x, horizon)) {
                kept.push_back(x);
                continue;
            }
            bool placed = false;
            for (int m = 1; m <= 8 && !placed && h > 0; ++m) {
                for (double sgn : {1.0, -1.0}) {
                    double y = x + sgn * h / std::ldexp(1.0, m);
                    if (y < p.lo() || y > p.hi()) continue;
                    if (map.orbit_avoids_delta(y, horizon)) {
                        kept.push_back(y);
                        placed = true;
                        break;
                    }
                }
            }
            if (placed) {
                ++s.nudged;
            } else {
                ++s.dropped;
            }
        }
        std::sort(kept.begin(), kept.end());
        for (std::size_t k = 1; k < kept.size(); ++k) s.density = std::max(s.density, kept[k] - kept[k - 1]);
        s.points.insert(s.points.end(), kept.begin(), kept.end());
    }
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    if (s.points.empty()) throw ValidationError("region " + region.to_string() + " has no sample points off Δ");
    return s;
}

SampleSet equidistributed_sample(const PcMap& map, const RegionSet& region, int grid, int horizon, double target_gap,
                                 const BowenOptions& opt) {
    if (opt.refine_factor <= 1) return sample_region(map, region, grid, horizon);
    SampleSet fine = sample_region(map, region, (grid - 1) * opt.refine_factor + 1, horizon);
    const auto t = opt.parallel ? kernels::omp::orbit_table(map, fine.points, horizon, opt.chart)
                                : kernels::serial::orbit_table(map, fine.points, horizon, opt.chart);
    const std::size_t m = t.size();
    if (m < 2 || grid >= static_cast<int>(m)) return fine;

    // Weight of a neighbouring pair at depth D: largest displacement over the first
    // D steps, stopping where the itineraries split.
    std::vector<double> w(m, 0.0);
    std::vector<char> split(m, 0), inside(m, 0);
    for (std::size_t i = 1; i < m; ++i) inside[i] = region.contains(0.5 * (t.x[i] + t.x[i - 1]));
    int depth = 1;
    std::vector<double> chosen;
    for (int d = 1; d <= horizon; ++d) {
        double sum = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (!inside[i] || split[i]) {
                sum += w[i];
                continue;
            }
            w[i] = std::max(w[i], std::abs(t.at(i, d - 1) - t.at(i - 1, d - 1)));
            if (t.code_at(i, d - 1) != t.code_at(i - 1, d - 1)) split[i] = 1;
            sum += w[i];
        }
        // Deepest level whose displacement the budget still spreads below the target gap.
        if (d == 1 || sum / (grid - 1) <= target_gap) {
            depth = d;
            chosen = w;
        }
    }

    std::vector<double> cum(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) cum[i] = cum[i - 1] + chosen[i];
    SampleSet s = fine;
    s.points.clear();
    s.density = 0;
    s.balanced_depth = depth;
    const double W = cum.back();
    if (!(W > 0)) return fine;
    std::size_t i = 0;
    for (int k = 0; k < grid; ++k) {
        const double target = W * k / (grid - 1);
        while (i + 1 < m && cum[i + 1] <= target) ++i;
        std::size_t pick = i;
        if (i + 1 < m && cum[i + 1] - target < target - cum[i]) pick = i + 1;
        if (s.points.empty() || fine.points[pick] > s.points.back()) s.points.push_back(fine.points[pick]);
    }
    for (std::size_t k = 1; k < s.points.size(); ++k) {
        if (region.contains(0.5 * (s.points[k] + s.points[k - 1]))) s.density = std::max(s.density, s.points[k] - s.points[k - 1]);
    }
    return s;
}

std::size_t max_separated(const PcMap& map, const SampleSet& sample, int n, double eps, const BowenOptions& opt) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    auto t = make_table(map, sample, n, opt);
    auto c = kernels::bowen_cell(t, {n, eps});
    certify_separated(t, c.separated, n, eps);
    return c.separated.size();
}

std::size_t min_spanning(const PcMap& map, const SampleSet& sample, int n, double eps, const BowenOptions& opt) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    auto t = make_table(map, sample, n, opt);
    auto c = kernels::bowen_cell(t, {n, eps});
    const auto& w = spanning_witness(c);
    certify_spanning(t, w, n, eps);
    return w.size();
}

BowenResult bowen_entropy(const PcMap& map, const RegionSet& region_in, const std::vector<int>& n_range,
                          const std::vector<double>& eps_schedule, int grid, const BowenOptions& opt) {
    if (n_range.empty() || eps_schedule.empty()) throw std::invalid_argument("bowen_entropy needs n values and eps values");
    for (std::size_t k = 1; k < n_range.size(); ++k) {
        if (!(n_range[k] > n_range[k - 1])) throw std::invalid_argument("n range must be increasing");
    }
    for (std::size_t k = 1; k < eps_schedule.size(); ++k) {
        if (!(eps_schedule[k] < eps_schedule[k - 1])) throw std::invalid_argument("eps schedule must be strictly decreasing");
    }
    if (n_range.front() < 1 || !(eps_schedule.back() > 0)) throw std::invalid_argument("n must be >= 1 and eps > 0");

    const RegionSet region = region_in.empty() ? RegionSet(map.domain()) : region_in;
    BowenResult res;
    res.sample = equidistributed_sample(map, region, grid, n_range.back(), opt.resolution_factor * eps_schedule.front(), opt);
    const auto table = make_table(map, res.sample, n_range.back(), opt);

    double chart_density = 0;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (region.contains(0.5 * (table.x[i] + table.x[i - 1]))) {
            chart_density = std::max(chart_density, std::abs(table.at(i, 0) - table.at(i - 1, 0)));
        }
    }

    // Cells at each eps and at eps / 2 for the sandwich.
    std::vector<kernels::BowenCell> cells;
    for (double eps : eps_schedule) {
        for (int n : n_range) {
            cells.push_back({n, eps});
            cells.push_back({n, eps / 2});
        }
    }
    const auto results = run_cells(table, cells, opt.parallel);

    res.separated.method = Method::bowen_separated;
    res.spanning.method = Method::bowen_spanning;
    res.separated.estimator = res.spanning.estimator = Estimator::slope_fit;

    std::size_t ci = 0;
    for (double eps : eps_schedule) {
        EpsRow row;
        row.eps = eps;
        row.coarse = chart_density > eps / 4;
        std::vector<LogRecord> sep_all, span_all, sep_ok, span_ok;
        for (int n : n_range) {
            const auto& full = results[ci];
            const auto& half = results[ci + 1];
            ci += 2;
            certify_separated(table, full.separated, n, eps);
            const auto& w = spanning_witness(full);
            const auto& w_half = spanning_witness(half);
            certify_spanning(table, w, n, eps);
            certify_spanning(table, w_half, n, eps / 2);

            BowenCellRecord rec;
            rec.n = n;
            rec.eps = eps;
            rec.separated = full.separated.size();
            rec.spanning = w.size();
            rec.spanning_half = w_half.size();
            rec.max_gap = full.max_gap;
            rec.split_pairs = full.split_pairs;
            rec.resolved = full.max_gap <= opt.resolution_factor * eps &&
                           static_cast<double>(table.size()) >= opt.min_samples_per_piece * static_cast<double>(full.split_pairs + 1);
            res.cells.push_back(rec);

            if (!(rec.spanning <= rec.separated && rec.separated <= rec.spanning_half) && res.sandwich_ok) {
                res.sandwich_ok = false;
                res.sandwich_witness = "n=" + std::to_string(n) + ", eps=" + format_real(eps) + ": r=" +
                                       std::to_string(rec.spanning) + ", s=" + std::to_string(rec.separated) +
                                       ", r(eps/2)=" + std::to_string(rec.spanning_half);
            }

            std::string flag = rec.resolved ? "" : "unresolved";
            if (row.coarse) flag += flag.empty() ? "coarse" : ";coarse";
            res.separated.records.push_back({n, static_cast<double>(rec.separated), eps, flag});
            res.spanning.records.push_back({n, static_cast<double>(rec.spanning), eps, flag});

            LogRecord ls{n, std::log(static_cast<double>(rec.separated))};
            LogRecord lr{n, std::log(static_cast<double>(rec.spanning))};
            sep_all.push_back(ls);
            span_all.push_back(lr);
            if (rec.resolved) {
                sep_ok.push_back(ls);
                span_ok.push_back(lr);
                ++row.resolved_cells;
                row.deepest_resolved = n;
            }
        }
        const bool use_resolved = row.resolved_cells >= 2;
        const auto& sv = use_resolved ? sep_ok : sep_all;
        const auto& rv = use_resolved ? span_ok : span_all;
        if (sv.size() >= 2 && sv.front().n != sv.back().n) {
            row.separated_slope = least_squares(sv).slope;
            row.spanning_slope = least_squares(rv).slope;
        } else {
            row.separated_slope = row.spanning_slope = std::numeric_limits<double>::quiet_NaN();
        }
        res.table.push_back(row);
    }

    // Counts only grow as eps shrinks, so the entropy is the supremum over eps of
    // the per-eps growth rates. Rows qualify with enough resolved cells for an
    // over-determined fit, or failing that with the most resolved cells (at least 2).
    std::vector<const EpsRow*> rows;
    for (const EpsRow& row : res.table) {
        if (row.resolved_cells >= opt.min_resolved_cells) rows.push_back(&row);
    }
    if (rows.empty()) {
        int best = 2;
        for (const EpsRow& row : res.table) best = std::max(best, row.resolved_cells);
        for (const EpsRow& row : res.table) {
            if (row.resolved_cells == best) rows.push_back(&row);
        }
    }
    if (rows.empty()) {
        // The sample is too sparse for these n and eps; slopes of saturated counts mean nothing.
        res.estimate_eps = res.spanning_eps = std::numeric_limits<double>::quiet_NaN();
        res.separated.estimate = res.spanning.estimate = std::numeric_limits<double>::quiet_NaN();
        res.separated.note = res.spanning.note = "no eps has two resolved cells; raise --grid or lower n";
        return res;
    }
    const EpsRow* sep = rows.front();
    const EpsRow* span = rows.front();
    for (const EpsRow* row : rows) {
        if (row->separated_slope > sep->separated_slope) sep = row;
        if (row->spanning_slope > span->spanning_slope) span = row;
    }
    res.estimate_eps = sep->eps;
    res.spanning_eps = span->eps;
    res.separated.estimate = sep->separated_slope;
    res.spanning.estimate = span->spanning_slope;
    return res;
}

}  // namespace pcent
