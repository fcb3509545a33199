#include "pcent/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcent/error.hpp"
#include "pcent/format.hpp"

namespace pcent {

Interval::Interval(double lo, double hi, bool lo_open, bool hi_open)
    : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("interval ends must be finite");
    }
    if (lo > hi) {
        throw std::invalid_argument("interval with lo > hi: " + format_real(lo) + " > " + format_real(hi));
    }
    if (lo == hi && (lo_open || hi_open)) {
        throw std::invalid_argument("empty interval at " + format_real(lo));
    }
}

bool Interval::contains(double x) const {
    bool above = lo_open_ ? x > lo_ : x >= lo_;
    bool below = hi_open_ ? x < hi_ : x <= hi_;
    return above && below;
}

std::string Interval::to_string() const {
    return std::string(lo_open_ ? "(" : "[") + format_real(lo_) + ", " + format_real(hi_) + (hi_open_ ? ")" : "]");
}

// ---------------------------------------------------------------------------

PointSet::PointSet(std::vector<double> values, double tol) : tol_(tol) {
    if (tol < 0) throw std::invalid_argument("negative point tolerance");
    std::sort(values.begin(), values.end());
    points_.reserve(values.size());
    for (double v : values) {
        if (points_.empty() || v - points_.back() > tol_) points_.push_back(v);
    }
}

PointSet PointSet::from_sorted_unique(std::vector<double> values, double tol) {
    PointSet s;
    s.tol_ = tol;
    s.points_ = std::move(values);
    return s;
}

bool PointSet::contains(double x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x - tol_);
    return it != points_.end() && *it <= x + tol_;
}

PointSet PointSet::merged(const PointSet& other) const {
    std::vector<double> all;
    all.reserve(points_.size() + other.points_.size());
    std::merge(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(), std::back_inserter(all));
    double tol = std::max(tol_, other.tol_);
    std::vector<double> out;
    out.reserve(all.size());
    for (double v : all) {
        if (out.empty() || v - out.back() > tol) out.push_back(v);
    }
    return from_sorted_unique(std::move(out), tol);
}

bool PointSet::same_as(const PointSet& other, double tol) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (std::abs(points_[i] - other.points_[i]) > tol) return false;
    }
    return true;
}

bool PointSet::is_subset_of(const PointSet& other, double tol) const {
    for (double p : points_) {
        auto it = std::lower_bound(other.points_.begin(), other.points_.end(), p - tol);
        if (it == other.points_.end() || *it > p + tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// Orders by lo; at equal lo a closed end sorts first.
bool part_less(const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return !a.lo_open() && b.lo_open();
}

}  // namespace

OpenSet::OpenSet(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), part_less);
    for (const Interval& p : parts) {
        if (parts_.empty()) {
            parts_.push_back(p);
            continue;
        }
        Interval& last = parts_.back();
        bool joinable = p.lo() < last.hi() || (p.lo() == last.hi() && (!p.lo_open() || !last.hi_open()));
        if (!joinable) {
            parts_.push_back(p);
            continue;
        }
        double hi = last.hi();
        bool hi_open = last.hi_open();
        if (p.hi() > hi) {
            hi = p.hi();
            hi_open = p.hi_open();
        } else if (p.hi() == hi) {
            hi_open = hi_open && p.hi_open();
        }
        last = Interval(last.lo(), hi, last.lo_open(), hi_open);
    }
}

bool OpenSet::contains(double x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x, [](double v, const Interval& p) { return v < p.lo(); });
    if (it != parts_.end() && it->contains(x)) return true;
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
}

double OpenSet::measure() const {
    double m = 0;
    for (const Interval& p : parts_) m += p.diameter();
    return m;
}

bool OpenSet::same_as(const OpenSet& other, double tol) const {
    if (parts_.size() != other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[i];
        if (std::abs(a.lo() - b.lo()) > tol || std::abs(a.hi() - b.hi()) > tol) return false;
        if (a.lo_open() != b.lo_open() || a.hi_open() != b.hi_open()) return false;
    }
    return true;
}

std::string OpenSet::to_string() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += "|";
        s += parts_[i].to_string();
    }
    return s;
}

// ---------------------------------------------------------------------------

RegionSet::RegionSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), part_less);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].lo_open() || parts_[i].hi_open()) throw ValidationError("region parts must be closed intervals");
        if (i > 0 && parts_[i].lo() <= parts_[i - 1].hi()) throw ValidationError("region parts must be disjoint");
    }
}

bool RegionSet::contains(double x, double tol) const {
    for (const Interval& p : parts_) {
        if (p.contains_closure(x, tol)) return true;
    }
    return false;
}

std::string RegionSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += "|";
        s += parts_[i].to_string();
    }
    return s;
}

// ---------------------------------------------------------------------------

std::vector<Interval> components_of_complement(const Interval& domain, const PointSet& cuts) {
    const double tol = cuts.tol();
    for (double c : cuts) {
        if (!domain.contains_closure(c, tol)) {
            throw std::invalid_argument("cut point " + format_real(c) + " outside " + domain.to_string());
        }
    }
    std::vector<Interval> out;
    double lo = domain.lo();
    bool lo_open = domain.lo_open();
    for (double c : cuts) {
        if (c <= domain.lo() + tol) {
            lo_open = true;
            continue;
        }
        if (c >= domain.hi() - tol) break;
        out.emplace_back(lo, c, lo_open, true);
        lo = c;
        lo_open = true;
    }
    bool hi_open = domain.hi_open() || (!cuts.empty() && cuts.points().back() >= domain.hi() - tol);
    out.emplace_back(lo, domain.hi(), lo_open, hi_open);
    return out;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    double lo;
    bool lo_open;
    if (a.lo() > b.lo()) {
        lo = a.lo();
        lo_open = a.lo_open();
    } else if (b.lo() > a.lo()) {
        lo = b.lo();
        lo_open = b.lo_open();
    } else {
        lo = a.lo();
        lo_open = a.lo_open() || b.lo_open();
    }
    double hi;
    bool hi_open;
    if (a.hi() < b.hi()) {
        hi = a.hi();
        hi_open = a.hi_open();
    } else if (b.hi() < a.hi()) {
        hi = b.hi();
        hi_open = b.hi_open();
    } else {
        hi = a.hi();
        hi_open = a.hi_open() || b.hi_open();
    }
    if (lo < hi || (lo == hi && !lo_open && !hi_open)) return Interval(lo, hi, lo_open, hi_open);
    return std::nullopt;
}

OpenSet openset_intersect(const OpenSet& a, const OpenSet& b) {
    std::vector<Interval> out;
    auto pa = a.parts();
    auto pb = b.parts();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        if (auto x = intersect(pa[i], pb[j])) out.push_back(*x);
        // advance whichever part ends first
        if (pa[i].hi() < pb[j].hi() || (pa[i].hi() == pb[j].hi() && pa[i].hi_open())) {
            ++i;
        } else {
            ++j;
        }
    }
    return OpenSet(std::move(out));
}

OpenSet openset_union(const OpenSet& a, const OpenSet& b) {
    std::vector<Interval> all(a.parts().begin(), a.parts().end());
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    return OpenSet(std::move(all));
}

OpenSet openset_subtract_points(const OpenSet& a, const PointSet& points) {
    std::vector<Interval> out;
    for (const Interval& part : a.parts()) {
        double lo = part.lo();
        bool lo_open = part.lo_open();
        bool hi_removed = false;
        auto it = std::lower_bound(points.begin(), points.end(), part.lo());
        for (; it != points.end() && *it <= part.hi(); ++it) {
            double p = *it;
            if (!part.contains(p)) continue;
            if (p == part.hi()) hi_removed = true;
            if (p == lo) {
                lo_open = true;
                continue;
            }
            out.emplace_back(lo, p, lo_open, true);
            lo = p;
            lo_open = true;
        }
        if (lo < part.hi()) {
            out.emplace_back(lo, part.hi(), lo_open, part.hi_open() || hi_removed);
        } else if (part.is_point() && !hi_removed && !lo_open) {
            out.push_back(part);
        }
    }
    return OpenSet(std::move(out));
}

}  // namespace pcent
