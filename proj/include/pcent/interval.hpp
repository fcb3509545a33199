#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcent {

inline constexpr double default_point_tol = 1e-12;

/// A real interval with independently open or closed ends.
///
/// lo == hi is only accepted for a closed degenerate interval (a point marker).
class Interval {
public:
    Interval(double lo, double hi, bool lo_open, bool hi_open);

    static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval point(double x) { return {x, x, false, false}; }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool lo_open() const { return lo_open_; }
    bool hi_open() const { return hi_open_; }
    double diameter() const { return hi_ - lo_; }
    double midpoint() const { return 0.5 * (lo_ + hi_); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(double x) const;
    bool contains_closure(double x, double tol = 0.0) const { return x >= lo_ - tol && x <= hi_ + tol; }

    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
    bool lo_open_;
    bool hi_open_;
};

/// Sorted finite set of reals; values closer than tol are one point.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<double> values, double tol = default_point_tol);

    /// Wraps values that are already sorted and tol-separated.
    static PointSet from_sorted_unique(std::vector<double> values, double tol = default_point_tol);

    std::span<const double> points() const { return points_; }
    double tol() const { return tol_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    double operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(double x) const;
    /// Union, merging within the larger of the two tolerances.
    PointSet merged(const PointSet& other) const;
    /// True when both sets have the same size and pairwise distances within tol.
    bool same_as(const PointSet& other, double tol) const;
    bool is_subset_of(const PointSet& other, double tol) const;

private:
    std::vector<double> points_;
    double tol_ = default_point_tol;
};

/// Finite union of relatively open intervals.
///
/// Parts are disjoint, sorted, and no two parts can be joined into one interval.
/// A part may be closed at an end that coincides with the ambient domain's endpoint.
class OpenSet {
public:
    OpenSet() = default;
    explicit OpenSet(std::vector<Interval> parts);
    explicit OpenSet(Interval part) : OpenSet(std::vector<Interval>{part}) {}

    std::span<const Interval> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    bool contains(double x) const;
    double measure() const;

    /// Same parts with endpoints within tol of each other.
    bool same_as(const OpenSet& other, double tol) const;
    std::string to_string() const;

    friend bool operator==(const OpenSet&, const OpenSet&) = default;

private:
    std::vector<Interval> parts_;
};

/// Finite union of pairwise disjoint closed intervals.
class RegionSet {
public:
    RegionSet() = default;
    explicit RegionSet(std::vector<Interval> parts);
    explicit RegionSet(Interval part) : RegionSet(std::vector<Interval>{part}) {}

    std::span<const Interval> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(double x, double tol = 0.0) const;
    std::string to_string() const;

private:
    std::vector<Interval> parts_;
};

/// Connected components of `domain` with the cut points removed, sorted.
/// Cuts on the domain boundary only open that end; they add no component.
std::vector<Interval> components_of_complement(const Interval& domain, const PointSet& cuts);

std::optional<Interval> intersect(const Interval& a, const Interval& b);
OpenSet openset_intersect(const OpenSet& a, const OpenSet& b);
OpenSet openset_union(const OpenSet& a, const OpenSet& b);
OpenSet openset_subtract_points(const OpenSet& a, const PointSet& points);

/// Parses `[a,b]` or `[a,b]|[c,d]|...` into a RegionSet. Ends may be constant expressions.
RegionSet parse_region(const std::string& text);

}  // namespace pcent
