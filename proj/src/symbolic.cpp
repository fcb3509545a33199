#include "pcent/symbolic.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "pcent/error.hpp"
#include "pcent/format.hpp"
#include "pcent/kernels.hpp"

namespace pcent {

std::size_t default_point_cap() {
    if (const char* env = std::getenv("PCENTROPY_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

PointSet preimage_set(const PcMap& map, const PointSet& targets, const SymbolicOptions& opt) {
    auto pts = opt.parallel ? kernels::omp::preimage_level(map, targets.points(), opt.bisection_tol)
                            : kernels::serial::preimage_level(map, targets.points(), opt.bisection_tol);
    return PointSet(std::move(pts), opt.merge_tol);
}

DeltaTower::DeltaTower(const PcMap& map, SymbolicOptions opt)
    : map_(&map), opt_(opt), level_({}, opt.merge_tol), current_({}, opt.merge_tol) {}

void DeltaTower::advance() {
    PointSet level = depth_ == 0 ? PointSet(std::vector<double>(map_->delta().begin(), map_->delta().end()), opt_.merge_tol)
                                 : preimage_set(*map_, level_, opt_);
    if (level.size() > opt_.cap) throw ResourceCapExceeded("Δ^" + std::to_string(depth_ + 1) + " grows too large", opt_.cap);
    PointSet next = current_.merged(level);
    if (next.size() > opt_.cap) throw ResourceCapExceeded("Δ^" + std::to_string(depth_ + 1) + " grows too large", opt_.cap);
    level_ = std::move(level);
    current_ = std::move(next);
    ++depth_;
}

PointSet delta_n(const PcMap& map, int n, const SymbolicOptions& opt) {
    if (n < 0) throw std::invalid_argument("delta_n needs n >= 0");
    DeltaTower tower(map, opt);
    while (tower.depth() < n) tower.advance();
    return tower.current();
}

PieceCount count_pieces_with(const PcMap& map, const PointSet& dn, int n, const SymbolicOptions& opt) {
    std::vector<double> cuts;
    cuts.reserve(dn.size());
    const double lo = map.domain().lo(), hi = map.domain().hi();
    for (double p : dn) {
        if (p > lo + dn.tol() && p < hi - dn.tol()) cuts.push_back(p);
    }
    PieceCount pc;
    pc.components = cuts.size() + 1;
    if (n >= 1 && !cuts.empty()) {
        auto flags = opt.parallel ? kernels::omp::removable_junctions(map, cuts, n, opt.junction_tol)
                                  : kernels::serial::removable_junctions(map, cuts, n, opt.junction_tol);
        for (auto f : flags) pc.removable += f;
    }
    return pc;
}

std::size_t count_pieces(const PcMap& map, int n, const SymbolicOptions& opt) {
    if (n < 1) throw std::invalid_argument("count_pieces needs n >= 1");
    return count_pieces_with(map, delta_n(map, n, opt), n, opt).count();
}

EntropySeries ms_entropy(const PcMap& map, int n_max, Estimator estimator, const SymbolicOptions& opt) {
    if (n_max < 2) throw std::invalid_argument("ms_entropy needs n_max >= 2");
    EntropySeries s;
    s.method = Method::misiurewicz_szlenk;
    s.estimator = estimator;
    DeltaTower tower(map, opt);
    for (int n = 1; n <= n_max; ++n) {
        try {
            tower.advance();
        } catch (const ResourceCapExceeded& e) {
            s.truncated = true;
            s.note = e.what();
            break;
        }
        PieceCount pc = count_pieces_with(map, tower.current(), n, opt);
        SeriesRecord r;
        r.n = n;
        r.value = static_cast<double>(pc.count());
        if (pc.removable) r.flag = "merged-from:" + std::to_string(pc.components);
        s.records.push_back(std::move(r));
    }
    try {
        s.estimate = estimate_entropy(s.log_records(), estimator);
    } catch (const std::exception& e) {
        s.estimate = std::numeric_limits<double>::quiet_NaN();
        if (s.note.empty()) s.note = e.what();
    }
    return s;
}

FullBranchReport full_branch_check(const PcMap& map, int n_max, const SymbolicOptions& opt) {
    FullBranchReport rep;
    const double lo = map.domain().lo(), hi = map.domain().hi();
    const double tol = 1e-9 * map.domain().diameter();
    for (std::size_t i = 0; i < map.piece_count(); ++i) {
        const Branch& b = map.branch(i);
        double ya = b.value(b.piece.lo()), yb = b.value(b.piece.hi());
        if (std::abs(std::min(ya, yb) - lo) > tol || std::abs(std::max(ya, yb) - hi) > tol) {
            rep.precondition_ok = false;
            rep.precondition = "branch " + std::to_string(i + 1) + " is not onto the domain (image [" +
                               format_real(std::min(ya, yb)) + ", " + format_real(std::max(ya, yb)) + "])";
            return rep;
        }
    }

    const PointSet& delta = map.delta();
    const double n_pieces = static_cast<double>(map.piece_count());
    PointSet level(std::vector<double>(delta.begin(), delta.end()), opt.merge_tol);
    PointSet current({}, opt.merge_tol);
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            level = preimage_set(map, level, opt);
            const PointSet delta_tol(std::vector<double>(delta.begin(), delta.end()), opt.merge_tol);
            for (double p : level) {
                if (delta_tol.contains(p)) {
                    rep.precondition_ok = false;
                    rep.precondition = "Δ connects to itself: f^" + std::to_string(n - 1) + "(" + format_real(p) + ") lies in Δ";
                    return rep;
                }
            }
        }
        current = current.merged(level);
        if (current.size() > opt.cap) {
            rep.failure = "resource cap reached at n = " + std::to_string(n);
            return rep;
        }
        FullBranchRow row;
        row.n = n;
        row.delta_count = current.size();
        row.expected_delta = std::pow(n_pieces, n) - 1;
        row.pieces = count_pieces_with(map, current, n, opt).count();
        rep.rows.push_back(row);
        if (rep.failure.empty()) {
            if (static_cast<double>(row.delta_count) != row.expected_delta) {
                rep.failure = "#Δ^" + std::to_string(n) + " = " + std::to_string(row.delta_count) + ", expected " +
                              format_real(row.expected_delta);
            } else if (std::abs(static_cast<double>(row.pieces) - static_cast<double>(row.delta_count)) > 1) {
                rep.failure = "c_" + std::to_string(n) + " = " + std::to_string(row.pieces) + " is more than 1 away from #Δ^" +
                              std::to_string(n);
            }
        }
    }
    rep.pass = rep.failure.empty();
    return rep;
}

}  // namespace pcent
