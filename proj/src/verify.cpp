#include "pcent/verify.hpp"

#include <algorithm>
#include <cmath>

#include "pcent/bowen.hpp"
#include "pcent/cover.hpp"
#include "pcent/error.hpp"
#include "pcent/format.hpp"

namespace pcent {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (k < 0) return "⁻" + superscript(-k);
    if (k < 10) return digits[k];
    return superscript(k / 10) + digits[k % 10];
}

namespace {

// c_1..c_m for m up to n_max, shorter when the cap is reached.
std::vector<std::size_t> piece_counts(const PcMap& map, int n_max, const SymbolicOptions& opt, std::string* stop) {
    std::vector<std::size_t> c;
    DeltaTower tower(map, opt);
    for (int n = 1; n <= n_max; ++n) {
        try {
            tower.advance();
        } catch (const ResourceCapExceeded& e) {
            if (stop) *stop = e.what();
            break;
        }
        c.push_back(count_pieces_with(map, tower.current(), n, opt).count());
    }
    return c;
}

std::vector<std::size_t> delta_sizes(const PcMap& map, int n_max, const SymbolicOptions& opt) {
    std::vector<std::size_t> d;
    DeltaTower tower(map, opt);
    for (int n = 1; n <= n_max; ++n) {
        try {
            tower.advance();
        } catch (const ResourceCapExceeded&) {
            break;
        }
        d.push_back(tower.current().size());
    }
    return d;
}

void full_branch(const PcMap& map, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    const std::string N = std::to_string(map.piece_count());
    CheckResult count{"#Δⁿ=" + N + "ⁿ−1", CheckStatus::pass, ""};
    CheckResult near{"|c_n−#Δⁿ|≤1", CheckStatus::pass, ""};
    FullBranchReport rep = full_branch_check(map, cfg.n_max, cfg.symbolic);
    if (!rep.precondition_ok) {
        count.status = near.status = CheckStatus::skip;
        count.detail = near.detail = rep.precondition;
    } else {
        for (const FullBranchRow& r : rep.rows) {
            if (count.status == CheckStatus::pass && static_cast<double>(r.delta_count) != r.expected_delta) {
                count.status = CheckStatus::fail;
                count.detail = "n=" + std::to_string(r.n) + ": #Δⁿ=" + std::to_string(r.delta_count);
            }
            if (near.status == CheckStatus::pass &&
                std::abs(static_cast<double>(r.pieces) - static_cast<double>(r.delta_count)) > 1) {
                near.status = CheckStatus::fail;
                near.detail = "n=" + std::to_string(r.n) + ": c_n=" + std::to_string(r.pieces) +
                              ", #Δⁿ=" + std::to_string(r.delta_count);
            }
        }
        if (static_cast<int>(rep.rows.size()) < cfg.n_max) {
            const std::string why = "checked n≤" + std::to_string(rep.rows.size()) + " (resource cap)";
            for (CheckResult* c : {&count, &near}) {
                if (c->status == CheckStatus::pass) c->detail = why;
            }
        }
    }
    out.push_back(count);
    out.push_back(near);
}

void submultiplicative(const PcMap& map, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    CheckResult r{"c_{n+m}≤c_n·c_m", CheckStatus::pass, ""};
    std::string stop;
    auto c = piece_counts(map, cfg.n_max, cfg.symbolic, &stop);
    const int m_max = static_cast<int>(c.size());
    for (int n = 1; n <= m_max && r.status == CheckStatus::pass; ++n) {
        for (int m = 1; n + m <= m_max; ++m) {
            const auto cn = c[static_cast<std::size_t>(n - 1)], cm = c[static_cast<std::size_t>(m - 1)];
            const auto cnm = c[static_cast<std::size_t>(n + m - 1)];
            if (cnm > cn * cm) {
                r.status = CheckStatus::fail;
                r.detail = "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": " + std::to_string(cnm) + " > " +
                           std::to_string(cn) + "·" + std::to_string(cm);
                break;
            }
        }
    }
    if (r.status == CheckStatus::pass && m_max < cfg.n_max) r.detail = "checked n+m≤" + std::to_string(m_max) + " (" + stop + ")";
    out.push_back(r);
}

void cover_route(const PcMap& map, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    CheckResult aleph{"ℵ(Dⁿ over X∖Δⁿ)=#components", CheckStatus::pass, ""};
    CheckResult boundary{"∂Dⁿ=Δⁿ", CheckStatus::pass, ""};
    const int n_max = std::min(cfg.n_max, cfg.cover_n_max);
    const Cover D = natural_cover(map);
    const RegionSet X(map.domain());
    DeltaTower tower(map, cfg.symbolic);
    int checked = 0;
    try {
        for (int n = 1; n <= n_max; ++n) {
            tower.advance();
            const Cover Dn = refine_n(map, D, n, cfg.symbolic.cap);
            const PieceCount pc = count_pieces_with(map, tower.current(), n, cfg.symbolic);
            const std::size_t a = minimal_subcover_cardinality(Dn, X, tower.current());
            if (aleph.status == CheckStatus::pass && a != pc.components) {
                aleph.status = CheckStatus::fail;
                aleph.detail = "n=" + std::to_string(n) + ": ℵ=" + std::to_string(a) + ", components=" +
                               std::to_string(pc.components);
            }
            const PointSet b = boundary_of_refined_natural_cover(map, n, cfg.symbolic.merge_tol);
            std::vector<double> interior;
            for (double p : tower.current()) {
                if (p > map.domain().lo() && p < map.domain().hi()) interior.push_back(p);
            }
            const PointSet dn(std::move(interior), cfg.symbolic.merge_tol);
            if (boundary.status == CheckStatus::pass && !b.same_as(dn, cfg.symbolic.merge_tol)) {
                boundary.status = CheckStatus::fail;
                boundary.detail = "n=" + std::to_string(n) + ": #∂Dⁿ=" + std::to_string(b.size()) + ", #Δⁿ=" +
                                  std::to_string(dn.size());
            }
            checked = n;
        }
    } catch (const ResourceCapExceeded& e) {
        for (CheckResult* c : {&aleph, &boundary}) {
            if (c->status == CheckStatus::pass) c->detail = "checked n≤" + std::to_string(checked) + " (" + e.what() + ")";
        }
    } catch (const NotACover& e) {
        aleph.status = CheckStatus::fail;
        aleph.detail = e.what();
    }
    out.push_back(aleph);
    out.push_back(boundary);
}

void bowen_sandwich(const PcMap& map, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    CheckResult r{"r_n(ε)≤s_n(ε)≤r_n(ε/2)", CheckStatus::pass, ""};
    const int n_max = std::min(cfg.n_max, cfg.bowen_n_max);
    if (n_max < 1) {
        r.status = CheckStatus::skip;
        r.detail = "n-max below 1";
        out.push_back(r);
        return;
    }
    std::vector<int> ns;
    for (int n = 1; n <= n_max; ++n) ns.push_back(n);
    BowenResult b = bowen_entropy(map, RegionSet(map.domain()), ns, cfg.bowen_eps, cfg.bowen_grid);
    if (!b.sandwich_ok) {
        r.status = CheckStatus::fail;
        r.detail = b.sandwich_witness;
    }
    out.push_back(r);
}

void power_rule(const PcMap& map, int k, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    CheckResult r{"c_n(f" + superscript(k) + ")=c_{" + std::to_string(k) + "n}(f)", CheckStatus::pass, ""};
    try {
        const PcMap fk = iterate_map(map, k, cfg.symbolic);
        std::string stop;
        auto lhs = piece_counts(fk, cfg.n_max, cfg.symbolic, &stop);
        auto rhs = piece_counts(map, k * cfg.n_max, cfg.symbolic, &stop);
        int checked = 0;
        for (int n = 1; n <= static_cast<int>(lhs.size()) && k * n <= static_cast<int>(rhs.size()); ++n) {
            const auto a = lhs[static_cast<std::size_t>(n - 1)], b = rhs[static_cast<std::size_t>(k * n - 1)];
            if (a != b) {
                r.status = CheckStatus::fail;
                r.detail = "n=" + std::to_string(n) + ": " + std::to_string(a) + " vs " + std::to_string(b);
                break;
            }
            checked = n;
        }
        if (r.status == CheckStatus::pass && checked < cfg.n_max) {
            r.detail = "checked n≤" + std::to_string(checked) + " (" + stop + ")";
            if (checked == 0) r.status = CheckStatus::skip;
        }
    } catch (const ResourceCapExceeded& e) {
        r.status = CheckStatus::skip;
        r.detail = e.what();
    }
    out.push_back(r);
}

void conjugacy(const PcMap& map, const PlHomeo& phi, const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    CheckResult d{"#Δⁿ(φfφ⁻¹)=#Δⁿ(f)", CheckStatus::pass, ""};
    CheckResult c{"c_n(φfφ⁻¹)=c_n(f)", CheckStatus::pass, ""};
    const PcMap g = conjugate_map(map, phi);
    auto df = delta_sizes(map, cfg.n_max, cfg.symbolic), dg = delta_sizes(g, cfg.n_max, cfg.symbolic);
    auto cf = piece_counts(map, cfg.n_max, cfg.symbolic, nullptr), cg = piece_counts(g, cfg.n_max, cfg.symbolic, nullptr);
    auto compare = [](CheckResult& r, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        const std::size_t m = std::min(a.size(), b.size());
        if (a.size() != b.size()) {
            r.status = CheckStatus::fail;
            r.detail = "sequences stop at different n";
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i] != b[i]) {
                r.status = CheckStatus::fail;
                r.detail = "n=" + std::to_string(i + 1) + ": " + std::to_string(b[i]) + " vs " + std::to_string(a[i]);
                return;
            }
        }
    };
    compare(d, df, dg);
    compare(c, cf, cg);
    out.push_back(d);
    out.push_back(c);
}

}  // namespace

std::vector<CheckResult> verify_map(const PcMap& map, const VerifyConfig& cfg) {
    if (cfg.n_max < 1) throw std::invalid_argument("verify needs n-max >= 1");
    std::vector<CheckResult> out;
    full_branch(map, cfg, out);
    submultiplicative(map, cfg, out);
    cover_route(map, cfg, out);
    bowen_sandwich(map, cfg, out);
    if (cfg.power_k) {
        if (*cfg.power_k < 1) throw std::invalid_argument("power k must be >= 1");
        power_rule(map, *cfg.power_k, cfg, out);
    }
    if (cfg.phi) conjugacy(map, *cfg.phi, cfg, out);
    return out;
}

}  // namespace pcent
