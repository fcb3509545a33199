#include "pcent/pcmap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcent/detail/parser.hpp"
#include "pcent/error.hpp"
#include "pcent/format.hpp"

namespace pcent {

namespace {

constexpr double domain_clamp_tol = 1e-9;

void validate_branch(const Branch& b, std::size_t index, const Interval& domain, const ValidationOptions& opt) {
    const double a = b.piece.lo(), c = b.piece.hi();
    const std::string where = "piece " + std::to_string(index + 1) + " " + b.piece.to_string();
    const int sgn = sign_of(b.monotonicity);
    const int grid = std::max(opt.grid, 2);
    double prev = 0;
    for (int k = 0; k < grid; ++k) {
        double x = k + 1 == grid ? c : a + (c - a) * k / (grid - 1);
        double y = b.value(x);
        if (!std::isfinite(y)) throw ValidationError(where + ": branch is not finite at x = " + format_real(x));
        if (y < domain.lo() - opt.image_tol || y > domain.hi() + opt.image_tol) {
            throw ValidationError(where + ": image leaves the domain at x = " + format_real(x) + " (f = " +
                                  format_real(y) + ")");
        }
        if (opt.check_monotone && k > 0 && !(sgn * (y - prev) > 0)) {
            throw ValidationError(where + ": branch is not strictly " +
                                  (sgn > 0 ? std::string("increasing") : std::string("decreasing")) + " near x = " +
                                  format_real(x));
        }
        prev = y;
    }
}

}  // namespace

PcMap::PcMap(Interval domain, std::vector<Branch> branches, DeltaConvention convention, ValidationOptions options)
    : domain_(Interval::closed(domain.lo(), domain.hi())), branches_(std::move(branches)), convention_(convention) {
    if (!(domain_.hi() > domain_.lo())) throw ValidationError("domain must have non-empty interior");
    if (branches_.empty()) throw ValidationError("map has no pieces");
    if (branches_.front().piece.lo() != domain_.lo()) throw ValidationError("first piece does not start at the domain's left end");
    if (branches_.back().piece.hi() != domain_.hi()) throw ValidationError("last piece does not end at the domain's right end");

    std::vector<double> cuts;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const Interval& p = branches_[i].piece;
        if (!(p.hi() > p.lo())) throw ValidationError("piece " + std::to_string(i + 1) + " is empty");
        if (i > 0) {
            double prev_hi = branches_[i - 1].piece.hi();
            if (p.lo() < prev_hi) throw ValidationError("pieces overlap at " + format_real(p.lo()));
            if (p.lo() > prev_hi) throw ValidationError("gap between pieces at " + format_real(prev_hi));
            cuts.push_back(p.lo());
        }
        bool first = i == 0, last = i + 1 == branches_.size();
        branches_[i].piece = Interval(p.lo(), p.hi(), !first, !last);
    }
    delta_ = PointSet::from_sorted_unique(std::move(cuts), 0.0);
    for (std::size_t i = 0; i < branches_.size(); ++i) validate_branch(branches_[i], i, domain_, options);
}

PcMap PcMap::with_convention(DeltaConvention c) const {
    PcMap copy = *this;
    copy.convention_ = c;
    return copy;
}

std::size_t PcMap::piece_index(double x) const {
    auto pts = delta_.points();
    auto it = convention_ == DeltaConvention::left_limit ? std::lower_bound(pts.begin(), pts.end(), x)
                                                         : std::upper_bound(pts.begin(), pts.end(), x);
    return static_cast<std::size_t>(it - pts.begin());
}

double PcMap::clamp_to_domain(double x) const {
    if (x < domain_.lo()) {
        if (x < domain_.lo() - domain_clamp_tol) throw std::out_of_range("x = " + format_real(x) + " is outside the domain");
        return domain_.lo();
    }
    if (x > domain_.hi()) {
        if (x > domain_.hi() + domain_clamp_tol) throw std::out_of_range("x = " + format_real(x) + " is outside the domain");
        return domain_.hi();
    }
    return x;
}

double PcMap::evaluate(double x) const {
    x = clamp_to_domain(x);
    return branches_[piece_index(x)].value(x);
}

std::vector<double> PcMap::orbit(double x, int n) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int j = 0; j < n; ++j) {
        x = clamp_to_domain(x);
        out.push_back(x);
        x = branches_[piece_index(x)].value(x);
    }
    return out;
}

bool PcMap::orbit_avoids_delta(double x, int horizon, double tol) const {
    auto pts = delta_.points();
    for (int j = 0; j < horizon; ++j) {
        x = clamp_to_domain(x);
        auto it = std::lower_bound(pts.begin(), pts.end(), x - tol);
        if (it != pts.end() && *it <= x + tol) return false;
        if (j + 1 < horizon) x = branches_[piece_index(x)].value(x);
    }
    return true;
}

std::string PcMap::to_text() const {
    std::ostringstream os;
    os << "domain = [" << format_real(domain_.lo()) << ", " << format_real(domain_.hi()) << "]\n";
    if (convention_ == DeltaConvention::right_limit) os << "at_delta = right\n";
    for (const Branch& b : branches_) {
        os << "piece (" << format_real(b.piece.lo()) << ", " << format_real(b.piece.hi()) << "): " << b.expr.to_string()
           << (b.monotonicity == Monotonicity::increasing ? " inc" : " dec") << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

PcMap parse_map(std::string_view source) {
    std::optional<Interval> domain;
    DeltaConvention convention = DeltaConvention::left_limit;
    std::vector<Branch> branches;
    std::vector<int> branch_lines;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string_view::npos) end = source.size();
        std::string_view line = source.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        ++line_no;

        detail::Cursor cur(detail::tokenize(line, line_no), line_no);
        if (cur.at_end()) continue;
        const int key_col = cur.peek().column;
        std::string key = cur.expect_ident();
        if (key == "domain") {
            if (domain) throw ParseError("domain declared twice", line_no, key_col);
            cur.expect_punct('=');
            cur.expect_punct('[');
            double lo = cur.constant();
            cur.expect_punct(',');
            double hi = cur.constant();
            cur.expect_punct(']');
            if (!(hi > lo)) throw ParseError("domain must satisfy lo < hi", line_no, key_col);
            domain = Interval::closed(lo, hi);
        } else if (key == "at_delta") {
            cur.expect_punct('=');
            const int col = cur.peek().column;
            std::string v = cur.expect_ident();
            if (v == "left") {
                convention = DeltaConvention::left_limit;
            } else if (v == "right") {
                convention = DeltaConvention::right_limit;
            } else {
                throw ParseError("at_delta must be 'left' or 'right'", line_no, col);
            }
        } else if (key == "piece") {
            if (!domain) throw ParseError("piece before domain declaration", line_no, key_col);
            cur.expect_punct('(');
            double a = cur.constant();
            cur.expect_punct(',');
            double b = cur.constant();
            cur.expect_punct(')');
            cur.expect_punct(':');
            if (!(b > a)) throw ParseError("piece must satisfy a < b", line_no, key_col);
            Expr e = cur.expr();
            const int col = cur.peek().column;
            if (cur.peek().kind != detail::Token::Kind::ident) cur.fail("expected 'inc' or 'dec' after the branch expression");
            std::string m = cur.next().text;
            Monotonicity mono;
            if (m == "inc" || m == "increasing") {
                mono = Monotonicity::increasing;
            } else if (m == "dec" || m == "decreasing") {
                mono = Monotonicity::decreasing;
            } else {
                throw ParseError("expected 'inc' or 'dec', found '" + m + "'", line_no, col);
            }
            branches.push_back(Branch{Interval::open(a, b), std::move(e), mono});
            branch_lines.push_back(line_no);
        } else {
            throw ParseError("unknown statement '" + key + "'", line_no, key_col);
        }
        if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "'");
    }
    if (!domain) throw ParseError("missing 'domain = [lo, hi]'", std::max(line_no, 1), 1);
    if (branches.empty()) throw ParseError("no pieces declared", std::max(line_no, 1), 1);
    for (std::size_t i = 1; i < branches.size(); ++i) {
        if (branches[i].piece.lo() < branches[i - 1].piece.hi()) {
            throw ValidationError("line " + std::to_string(branch_lines[i]) + ": pieces overlap");
        }
    }
    return PcMap(*domain, std::move(branches), convention);
}

std::optional<double> branch_inverse(const Branch& branch, double y, double tol) {
    const double a = branch.piece.lo(), b = branch.piece.hi();
    const double ya = branch.value(a), yb = branch.value(b);
    const double lo = std::min(ya, yb), hi = std::max(ya, yb);
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (y < lo - slack || y > hi + slack) return std::nullopt;
    if (y <= lo) return ya <= yb ? a : b;
    if (y >= hi) return ya <= yb ? b : a;

    if (auto aff = branch.expr.as_affine(); aff && aff->slope != 0) {
        return std::clamp((y - aff->intercept) / aff->slope, a, b);
    }

    const bool increasing = yb > ya;
    double l = a, r = b;
    double fl = ya, fr = yb;
    for (int it = 0; it < 200 && r - l > tol; ++it) {
        double m = 0.5 * (l + r);
        if (m <= l || m >= r) break;
        double fm = branch.value(m);
        if (fm < std::min(fl, fr) || fm > std::max(fl, fr)) {
            throw ValidationError("branch on " + branch.piece.to_string() + " is not monotone near x = " + format_real(m));
        }
        if ((fm < y) == increasing) {
            l = m;
            fl = fm;
        } else {
            r = m;
            fr = fm;
        }
    }
    return 0.5 * (l + r);
}

}  // namespace pcent
