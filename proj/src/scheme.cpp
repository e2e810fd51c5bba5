#include "grstratum/scheme.hpp"

#include <algorithm>
#include <set>

namespace grst {

std::string GenTag::str() const {
    std::string s = kind == Kind::a1 ? "A1" : "A2";
    s += "(" + to_string(base) + ";e" + std::to_string(lam + 1);
    if (kind == Kind::a2) s += ",e" + std::to_string(mu + 1);
    s += ";" + to_string(beta) + ")";
    return s;
}

int SchemeIdeal::count_a1() const {
    return (int)std::count_if(gens.begin(), gens.end(),
                              [](const auto& g) { return g.first.kind == GenTag::Kind::a1; });
}

int SchemeIdeal::count_a2() const {
    return (int)(gens.size() - count_a1());
}

namespace {

// grow += c * (row of gamma2, which may be a Delta unit row)
void accumulate(UFamily::Row& grow, const UFamily& U, const StandardSet& ss, const Exponent& g2,
                const Poly& c, bool negate) {
    auto add_entry = [&](const Exponent& beta, const Poly& p) {
        auto it = grow.find(beta);
        if (it == grow.end()) {
            Poly q = negate ? -p : p;
            if (!q.is_zero()) grow[beta] = std::move(q);
        } else {
            if (negate)
                it->second -= p;
            else
                it->second += p;
            if (it->second.is_zero()) grow.erase(it);
        }
    };
    if (ss.in_delta(g2)) {
        add_entry(g2, c);
    } else {
        for (const auto& [beta, inner] : U.row(g2)) add_entry(beta, c * inner);
    }
}

}  // namespace

SchemeIdeal build_scheme(const std::vector<Exponent>& corners, int n, const MonomialOrder& ord,
                         const BuildOptions& opts) {
    SchemeIdeal si;
    si.n = n;
    si.ord = ord;
    si.ss = StandardSet::validate_corners(corners, n);
    si.mode = opts.mode;
    si.triples = si.ss.edge_triples();

    const bool finite = si.ss.finite_delta();
    if (si.mode == Mode::full && !ord.is_graded() && !finite)
        throw ModeViolation("full mode needs a graded order or a finite standard set; "
                            "use homogeneous or type mode");
    if (si.mode == Mode::type_d) {
        if (opts.script_d.empty())
            throw ConfigError("type mode needs an explicit finite subset of Delta");
        for (const auto& b : opts.script_d)
            if (!si.ss.in_delta(b))
                throw ConfigError("type-mode element " + to_string(b) + " is not in Delta");
    }

    // Procedure degree bound: max(|alpha|+1) over corners, max(|eps|+2) over edge points.
    int Dproc = 0;
    for (const auto& a : si.ss.corners()) Dproc = std::max(Dproc, degree(a) + 1);
    for (const auto& t : si.triples) Dproc = std::max(Dproc, degree(t.eps) + 2);
    if (opts.degree_override) {
        if (*opts.degree_override < Dproc)
            throw ConfigError("degree bound below the procedure value " + std::to_string(Dproc));
        Dproc = *opts.degree_override;
    }
    int trunc = Dproc;
    if (si.mode == Mode::full && finite && !ord.is_graded()) {
        // whole border fits in the theta+1 box
        int t = 0;
        for (int th : si.ss.theta()) t += th + 1;
        trunc = std::max(trunc, t);
    }
    si.D = trunc;

    // Parameter variables T_{alpha,beta}.
    std::vector<TVar> vars;
    int maxdeg = 0;
    for (const auto& a : si.ss.corners()) maxdeg = std::max(maxdeg, degree(a));
    std::vector<Exponent> beta_pool;
    if (si.mode == Mode::type_d) {
        beta_pool = opts.script_d;
    } else if (si.mode == Mode::full && finite && !ord.is_graded()) {
        int t = 0;
        for (int th : si.ss.theta()) t += th;
        beta_pool = si.ss.enumerate_delta_upto(t, ord);
    } else {
        beta_pool = si.ss.enumerate_delta_upto(maxdeg, ord);
    }
    for (const auto& a : si.ss.corners())
        for (const auto& b : beta_pool) {
            if (!ord.less(b, a)) continue;
            if (si.mode == Mode::homogeneous && degree(a) != degree(b)) continue;
            vars.push_back(TVar{a, b});
        }
    si.vt = VarTable(std::move(vars), ord);

    // Weight function on the exponents that index variables.
    std::vector<Exponent> pts;
    for (int i = 0; i < si.vt.size(); ++i) {
        pts.push_back(si.vt.var(i).alpha);
        pts.push_back(si.vt.var(i).beta);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    si.weight = build_weight(ord, pts);
    si.var_w = var_weights(si.vt, si.weight);

    si.nu = std::make_shared<NuMap>(&si.ss);
    bool capped = si.mode != Mode::type_d;
    si.ufam = std::make_shared<UFamily>(&si.ss, &si.ord, &si.vt, *si.nu, si.mode, trunc, capped);
    if (capped) si.ufam->populate();
    const UFamily& U = *si.ufam;

    std::set<std::map<Mono, mpq_class>> seen;
    auto emit = [&](GenTag tag, const Poly& p) {
        if (p.is_zero()) return;
        if (!seen.insert(p.terms()).second) return;  // exact duplicate
        si.gens.emplace_back(std::move(tag), p);
    };

    // A1: U_{alpha+lam,beta} - sum_gamma U_{alpha,gamma} U_{gamma+lam,beta}
    std::vector<Exponent> corners_sorted = si.ss.corners();
    std::sort(corners_sorted.begin(), corners_sorted.end(),
              [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); });
    for (const auto& alpha : corners_sorted) {
        for (int l = 0; l < n; ++l) {
            Exponent al = alpha;
            ++al[l];
            if (si.ss.membership(al) != StandardSet::Region::in_border) continue;
            UFamily::Row grow = U.row(al);
            for (const auto& [gamma, c] : U.row(alpha)) {
                Exponent g2 = gamma;
                ++g2[l];
                accumulate(grow, U, si.ss, g2, c, /*negate=*/true);
            }
            for (const auto& [beta, p] : grow)
                emit(GenTag{GenTag::Kind::a1, alpha, l, 0, beta}, p);
        }
    }

    // A2: sum_gamma U_{eps+lam,gamma} U_{gamma+mu,beta} - (lam <-> mu)
    for (const auto& t : si.triples) {
        if (t.lam == t.mu) continue;  // symmetric, identically zero
        Exponent el = t.eps, em = t.eps;
        ++el[t.lam];
        ++em[t.mu];
        UFamily::Row grow;
        for (const auto& [gamma, c] : U.row(el)) {
            Exponent g2 = gamma;
            ++g2[t.mu];
            accumulate(grow, U, si.ss, g2, c, false);
        }
        for (const auto& [gamma, c] : U.row(em)) {
            Exponent g2 = gamma;
            ++g2[t.lam];
            accumulate(grow, U, si.ss, g2, c, true);
        }
        for (const auto& [beta, p] : grow)
            emit(GenTag{GenTag::Kind::a2, t.eps, t.lam, t.mu, beta}, p);
    }

    return si;
}

std::map<Exponent, std::map<Exponent, Poly>> universal_family(const SchemeIdeal& si) {
    std::map<Exponent, std::map<Exponent, Poly>> fam;
    for (const auto& a : si.ss.corners()) fam[a] = {};
    for (int i = 0; i < si.vt.size(); ++i)
        fam[si.vt.var(i).alpha][si.vt.var(i).beta] = Poly::variable(i);
    return fam;
}

}  // namespace grst
