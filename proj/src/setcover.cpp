// Minimal subcover cardinality: greedy sweep for interval elements,
// branch-and-bound over atoms for elements that are unions of intervals.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "pcent/cover.hpp"
#include "pcent/error.hpp"

namespace pcent {

namespace {

double snap(double v, const std::vector<double>& anchors, double tol) {
    auto it = std::lower_bound(anchors.begin(), anchors.end(), v - tol);
    if (it != anchors.end() && std::abs(*it - v) <= tol) return *it;
    return v;
}

// Moves element endpoints that sit within tol of an anchor onto it, so that
// round-off does not leave slivers uncovered next to excluded points.
std::vector<OpenSet> snapped(const Cover& cover, const std::vector<double>& anchors, double tol) {
    std::vector<OpenSet> out;
    out.reserve(cover.size());
    for (const OpenSet& e : cover.elements) {
        std::vector<Interval> parts;
        for (const Interval& p : e.parts()) {
            double lo = snap(p.lo(), anchors, tol), hi = snap(p.hi(), anchors, tol);
            if (lo < hi) {
                parts.emplace_back(lo, hi, p.lo_open(), p.hi_open());
            } else if (lo == hi && !p.lo_open() && !p.hi_open()) {
                parts.push_back(Interval::point(lo));
            }
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Greedy sweep. Optimal for covering points of a line by intervals.

bool reaches_from(const Interval& I, double p, bool need) {
    if (need) return I.contains(p);
    return I.lo() <= p && I.hi() > p;
}

SubcoverResult greedy_sweep(const std::vector<OpenSet>& elems, const RegionSet& target, const PointSet& exclude) {
    SubcoverResult res;
    auto excluded = [&](double x) { return exclude.contains(x); };
    std::optional<std::size_t> last;
    for (const Interval& part : target.parts()) {
        const double th = part.hi();
        double p = part.lo();
        bool need = !excluded(p);
        // An element picked for the previous part may already reach into this one.
        if (last && reaches_from(elems[*last].parts()[0], p, need)) {
            const Interval& I = elems[*last].parts()[0];
            p = I.hi();
            need = I.hi_open() && !excluded(p);
        }
        while (p < th || (p == th && need)) {
            std::optional<std::size_t> best;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                const Interval& I = elems[i].parts()[0];
                if (!reaches_from(I, p, need)) continue;
                if (!best) {
                    best = i;
                    continue;
                }
                const Interval& B = elems[*best].parts()[0];
                if (I.hi() > B.hi() || (I.hi() == B.hi() && B.hi_open() && !I.hi_open())) best = i;
            }
            if (!best) {
                double witness = p;
                if (!need) {
                    double next = th;
                    for (const OpenSet& e : elems) {
                        double lo = e.parts()[0].lo();
                        if (lo > p && lo < next) next = lo;
                    }
                    witness = 0.5 * (p + next);
                }
                throw NotACover(witness);
            }
            const Interval& I = elems[*best].parts()[0];
            res.chosen.push_back(*best);
            last = best;
            if (I.hi() == p && !I.hi_open()) {
                need = false;  // a closed degenerate hit on p
                continue;
            }
            p = I.hi();
            need = I.hi_open() && !excluded(p);
        }
    }
    std::sort(res.chosen.begin(), res.chosen.end());
    res.chosen.erase(std::unique(res.chosen.begin(), res.chosen.end()), res.chosen.end());
    res.cardinality = res.chosen.size();
    return res;
}

// ---------------------------------------------------------------------------
// Atoms and set cover.

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~o.words_[k]) return false;
        }
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & o.words_[k]) return true;
        }
        return false;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    void and_not(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    friend bool operator==(const Bits&, const Bits&) = default;
    friend bool operator<(const Bits& a, const Bits& b) { return a.words_ < b.words_; }

private:
    std::vector<std::uint64_t> words_;
};

struct SetCoverProblem {
    std::size_t n_elems = 0;
    std::vector<Bits> atom_elems;  // elements containing each atom
    std::vector<Bits> elem_atoms;  // atoms inside each element
};

class Solver {
public:
    Solver(const SetCoverProblem& p, std::size_t node_cap) : p_(p), node_cap_(node_cap) {}

    SubcoverResult solve() {
        const std::size_t k = p_.atom_elems.size();
        Bits uncovered(k);
        for (std::size_t a = 0; a < k; ++a) uncovered.set(a);
        Bits alive(p_.n_elems);
        for (std::size_t e = 0; e < p_.n_elems; ++e) alive.set(e);
        drop_dominated(alive);

        best_ = greedy(uncovered, alive, {});
        std::vector<std::size_t> chosen;
        search(uncovered, alive, chosen);

        SubcoverResult r;
        r.chosen = best_;
        std::sort(r.chosen.begin(), r.chosen.end());
        r.cardinality = r.chosen.size();
        r.exact = !capped_;
        return r;
    }

private:
    // An element whose atoms lie inside another live element's atoms can be swapped
    // for it in any cover. Equal sets keep the lower index.
    void drop_dominated(Bits& alive) const {
        std::vector<std::size_t> size(p_.n_elems);
        for (std::size_t e = 0; e < p_.n_elems; ++e) size[e] = p_.elem_atoms[e].count();
        for (std::size_t e = 0; e < p_.n_elems; ++e) {
            for (std::size_t d = 0; d < p_.n_elems; ++d) {
                if (d == e || !alive.test(d) || size[d] < size[e]) continue;
                if (size[d] == size[e] && d > e) continue;
                if (p_.elem_atoms[e].count_and(p_.elem_atoms[d]) == size[e]) {
                    alive.reset(e);
                    break;
                }
            }
        }
    }

    std::vector<std::size_t> greedy(Bits uncovered, const Bits& alive, std::vector<std::size_t> chosen) const {
        while (uncovered.any()) {
            std::size_t best_e = 0, best_gain = 0;
            alive.for_each([&](std::size_t e) {
                std::size_t g = p_.elem_atoms[e].count_and(uncovered);
                if (g > best_gain) {
                    best_gain = g;
                    best_e = e;
                }
            });
            chosen.push_back(best_e);
            uncovered.and_not(p_.elem_atoms[best_e]);
        }
        return chosen;
    }

    // Disjoint-atoms packing: atoms sharing no live element each need their own pick.
    std::size_t lower_bound(const Bits& uncovered, const Bits& alive) const {
        Bits used(p_.n_elems);
        std::size_t lb = 0;
        uncovered.for_each([&](std::size_t a) {
            Bits cand = p_.atom_elems[a];
            cand &= alive;
            if (!cand.intersects(used)) {
                ++lb;
                used |= cand;
            }
        });
        return lb;
    }

    void search(const Bits& uncovered, const Bits& alive, std::vector<std::size_t>& chosen) {
        if (capped_) return;
        if (++nodes_ > node_cap_) {
            capped_ = true;
            return;
        }
        if (!uncovered.any()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + lower_bound(uncovered, alive) >= best_.size()) return;

        // Branch on the uncovered atom with the fewest live elements.
        std::size_t pick = 0, fewest = std::numeric_limits<std::size_t>::max();
        uncovered.for_each([&](std::size_t a) {
            std::size_t c = p_.atom_elems[a].count_and(alive);
            if (c < fewest) {
                fewest = c;
                pick = a;
            }
        });
        if (fewest == 0) return;

        std::vector<std::pair<std::size_t, std::size_t>> options;
        p_.atom_elems[pick].for_each([&](std::size_t e) {
            if (alive.test(e)) options.emplace_back(p_.elem_atoms[e].count_and(uncovered), e);
        });
        std::sort(options.begin(), options.end(), std::greater<>());

        Bits alive_next = alive;
        for (auto [gain, e] : options) {
            (void)gain;
            Bits rest = uncovered;
            rest.and_not(p_.elem_atoms[e]);
            chosen.push_back(e);
            alive_next.reset(e);
            search(rest, alive_next, chosen);
            chosen.pop_back();
            // Later branches exclude e: any cover using e was explored above.
            if (capped_) return;
        }
    }

    const SetCoverProblem& p_;
    std::size_t node_cap_;
    std::size_t nodes_ = 0;
    bool capped_ = false;
    std::vector<std::size_t> best_;
};

SubcoverResult branch_and_bound(const std::vector<OpenSet>& elems, const RegionSet& target, const PointSet& exclude,
                                std::size_t node_cap) {
    // Atoms: breakpoints and the open gaps between them, inside the target.
    std::vector<double> reps;
    for (const Interval& part : target.parts()) {
        std::vector<double> bp{part.lo(), part.hi()};
        for (const OpenSet& e : elems) {
            for (const Interval& p : e.parts()) {
                if (p.lo() > part.lo() && p.lo() < part.hi()) bp.push_back(p.lo());
                if (p.hi() > part.lo() && p.hi() < part.hi()) bp.push_back(p.hi());
            }
        }
        for (double x : exclude) {
            if (x > part.lo() && x < part.hi()) bp.push_back(x);
        }
        std::sort(bp.begin(), bp.end());
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
        for (std::size_t k = 0; k < bp.size(); ++k) {
            if (!exclude.contains(bp[k])) reps.push_back(bp[k]);
            if (k + 1 < bp.size()) reps.push_back(0.5 * (bp[k] + bp[k + 1]));
        }
    }

    // Element sets per atom, merging atoms covered by the same elements.
    std::vector<Bits> atom_sets;
    atom_sets.reserve(reps.size());
    for (double x : reps) {
        Bits b(elems.size());
        bool hit = false;
        for (std::size_t e = 0; e < elems.size(); ++e) {
            if (elems[e].contains(x)) {
                b.set(e);
                hit = true;
            }
        }
        if (!hit) throw NotACover(x);
        atom_sets.push_back(std::move(b));
    }
    std::sort(atom_sets.begin(), atom_sets.end());
    atom_sets.erase(std::unique(atom_sets.begin(), atom_sets.end()), atom_sets.end());

    // An atom whose element set contains another atom's is covered for free.
    std::sort(atom_sets.begin(), atom_sets.end(), [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
    std::vector<Bits> kept;
    for (const Bits& a : atom_sets) {
        bool dominated = false;
        for (const Bits& k : kept) {
            if (k.subset_of(a)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(a);
    }

    // Forced picks: atoms with a single element.
    std::vector<std::size_t> forced;
    std::vector<Bits> remaining;
    {
        Bits forced_set(elems.size());
        for (const Bits& a : kept) {
            if (a.count() == 1) a.for_each([&](std::size_t e) { forced_set.set(e); });
        }
        forced_set.for_each([&](std::size_t e) { forced.push_back(e); });
        for (const Bits& a : kept) {
            if (!a.intersects(forced_set)) remaining.push_back(a);
        }
    }

    SetCoverProblem prob;
    prob.n_elems = elems.size();
    prob.atom_elems = remaining;
    prob.elem_atoms.assign(elems.size(), Bits(remaining.size()));
    for (std::size_t a = 0; a < remaining.size(); ++a) remaining[a].for_each([&](std::size_t e) { prob.elem_atoms[e].set(a); });

    SubcoverResult r = Solver(prob, node_cap).solve();
    r.chosen.insert(r.chosen.end(), forced.begin(), forced.end());
    std::sort(r.chosen.begin(), r.chosen.end());
    r.chosen.erase(std::unique(r.chosen.begin(), r.chosen.end()), r.chosen.end());
    r.cardinality = r.chosen.size();
    return r;
}

}  // namespace

SubcoverResult minimal_subcover(const Cover& cover, const RegionSet& target, const PointSet& exclude,
                                const SubcoverOptions& opt) {
    std::vector<double> anchors(exclude.begin(), exclude.end());
    for (const Interval& p : target.parts()) {
        anchors.push_back(p.lo());
        anchors.push_back(p.hi());
    }
    std::sort(anchors.begin(), anchors.end());
    std::vector<OpenSet> elems = snapped(cover, anchors, opt.snap_tol);

    std::vector<OpenSet> nonempty;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!elems[i].empty()) {
            nonempty.push_back(elems[i]);
            index.push_back(i);
        }
    }
    if (target.empty()) return {};

    const bool intervals_only =
        std::all_of(nonempty.begin(), nonempty.end(), [](const OpenSet& e) { return e.size() == 1; });
    SubcoverResult r =
        intervals_only ? greedy_sweep(nonempty, target, exclude) : branch_and_bound(nonempty, target, exclude, opt.node_cap);
    for (auto& c : r.chosen) c = index[c];
    return r;
}

std::size_t minimal_subcover_cardinality(const Cover& cover, const RegionSet& target, const PointSet& exclude,
                                         const SubcoverOptions& opt) {
    return minimal_subcover(cover, target, exclude, opt).cardinality;
}

}  // namespace pcent
