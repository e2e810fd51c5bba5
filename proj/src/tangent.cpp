#include "grstratum/tangent.hpp"

#include <algorithm>

namespace grst {

QMatrix tangent_matrix(const SchemeIdeal& si) {
    QMatrix m;
    m.reserve(si.gens.size());
    for (const auto& [tag, p] : si.gens) {
        QRow row(si.vt.size(), 0);
        Poly lin = p.linear_component();
        for (const auto& [mono, c] : lin.terms()) row[mono[0].first] = c;
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

// Resolve b_{xi,beta} down to a corner-indexed variable or zero.
// Returns the variable index, or -1.
int resolve_b(const SchemeIdeal& si, Exponent xi, Exponent beta) {
    const auto& corners = si.ss.corners();
    while (!std::binary_search(corners.begin(), corners.end(), xi)) {
        int d = si.nu->at(xi);
        if (beta[d] == 0) return -1;  // beta - nu leaves N^n
        --xi[d];
        --beta[d];
    }
    auto v = si.vt.find(xi, beta);
    return v ? *v : -1;
}

}  // namespace

QMatrix tangent_matrix_resolved(const SchemeIdeal& si) {
    QMatrix m;
    m.reserve(si.gens.size());
    for (const auto& [tag, p] : si.gens) {
        QRow row(si.vt.size(), 0);
        if (tag.kind == GenTag::Kind::a1) {
            // b_{alpha+lam,beta} - b_{alpha,beta-lam}
            Exponent al = tag.base;
            ++al[tag.lam];
            int v1 = resolve_b(si, al, tag.beta);
            if (v1 >= 0) row[v1] += 1;
            if (tag.beta[tag.lam] > 0) {
                Exponent bl = tag.beta;
                --bl[tag.lam];
                auto v2 = si.vt.find(tag.base, bl);
                if (v2) row[*v2] -= 1;
            }
        } else {
            // b_{eps+lam,beta-mu} - b_{eps+mu,beta-lam}
            Exponent el = tag.base, em = tag.base;
            ++el[tag.lam];
            ++em[tag.mu];
            if (tag.beta[tag.mu] > 0) {
                Exponent bm = tag.beta;
                --bm[tag.mu];
                int v1 = resolve_b(si, el, bm);
                if (v1 >= 0) row[v1] += 1;
            }
            if (tag.beta[tag.lam] > 0) {
                Exponent bl = tag.beta;
                --bl[tag.lam];
                int v2 = resolve_b(si, em, bl);
                if (v2 >= 0) row[v2] -= 1;
            }
        }
        m.push_back(std::move(row));
    }
    return m;
}

QMatrix distinct_rows(const QMatrix& m) {
    QMatrix out;
    for (const auto& r : m) {
        if (std::all_of(r.begin(), r.end(), [](const mpq_class& v) { return v == 0; })) continue;
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

RrefResult row_reduce(QMatrix rows, const std::vector<int>& col_order) {
    size_t nrows = rows.size();
    RrefResult res;
    res.transform.assign(nrows, QRow(nrows, 0));
    for (size_t i = 0; i < nrows; ++i) res.transform[i][i] = 1;
    size_t r = 0;
    for (int c : col_order) {
        size_t p = r;
        while (p < nrows && rows[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(rows[r], rows[p]);
        std::swap(res.transform[r], res.transform[p]);
        mpq_class inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (auto& v : res.transform[r]) v *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            mpq_class f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
            for (size_t j = 0; j < nrows; ++j) res.transform[i][j] -= f * res.transform[r][j];
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = (int)r;
    res.rref = std::move(rows);
    return res;
}

TangentReport tangent_report(const SchemeIdeal& si) {
    TangentReport tr;
    tr.num_vars = si.vt.size();
    QMatrix A = tangent_matrix(si);
    // scan columns smallest variable first (highest canonical index)
    std::vector<int> col_order(tr.num_vars);
    for (int i = 0; i < tr.num_vars; ++i) col_order[i] = tr.num_vars - 1 - i;
    tr.rr = row_reduce(std::move(A), col_order);
    tr.rank = tr.rr.rank;
    tr.embedding_dim = tr.num_vars - tr.rank;
    tr.eliminable = tr.rr.pivots;
    std::sort(tr.eliminable.begin(), tr.eliminable.end());

    // kernel basis: one vector per free variable
    std::vector<bool> is_pivot(tr.num_vars, false);
    for (int p : tr.rr.pivots) is_pivot[p] = true;
    for (int f = 0; f < tr.num_vars; ++f) {
        if (is_pivot[f]) continue;
        QRow v(tr.num_vars, 0);
        v[f] = 1;
        for (int i = 0; i < tr.rank; ++i) v[tr.rr.pivots[i]] = -tr.rr.rref[i][f];
        tr.kernel.push_back(std::move(v));
    }
    return tr;
}

EmbeddedPresentation eliminate(const SchemeIdeal& si, const TangentReport& tr) {
    EmbeddedPresentation ep;
    const int V = si.vt.size();
    std::vector<bool> is_pivot(V, false);
    for (int p : tr.rr.pivots) is_pivot[p] = true;

    // Recombine generators: F_i = sum_j P_ij g_j.
    auto combine = [&](const QRow& coeffs) {
        Poly f;
        for (size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) f += si.gens[j].second.scaled(coeffs[j]);
        return f;
    };

    // Pivot rows give t' + g_{t'}; the substitution is t' -> t' - F_i.
    std::map<int, Poly> subst;
    for (int i = 0; i < tr.rank; ++i) {
        int t = tr.rr.pivots[i];
        Poly F = combine(tr.rr.transform[i]);
        subst[t] = Poly::variable(t) - F;
    }
    std::vector<Poly> candidates;
    for (size_t i = tr.rank; i < tr.rr.transform.size(); ++i) {
        Poly F = combine(tr.rr.transform[i]);
        if (!F.is_zero()) candidates.push_back(std::move(F));
    }

    // Close the substitution: descending W-weight, then descending variable.
    std::vector<int> order = tr.rr.pivots;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (si.var_w[a] != si.var_w[b]) return si.var_w[a] > si.var_w[b];
        return a < b;
    });
    int passes = 0;
    auto any_pivot_left = [&]() {
        for (auto& [t, p] : subst)
            for (int q : tr.rr.pivots)
                if (p.uses_var(q)) return true;
        for (auto& c : candidates)
            for (int q : tr.rr.pivots)
                if (c.uses_var(q)) return true;
        return false;
    };
    do {
        if (++passes > tr.rank + 1)
            throw SubstitutionNonterminating("eliminable substitution did not close");
        for (int t : order) {
            std::map<int, Poly> one{{t, subst[t]}};
            for (auto& [u, p] : subst)
                if (u != t && p.uses_var(t)) p = p.substitute(one);
            for (auto& c : candidates)
                if (c.uses_var(t)) c = c.substitute(one);
        }
    } while (any_pivot_left());

    // Pivot rows may leave nonzero residues once the substitution closes; they
    // are members of the image ideal just like the kernel combinations.
    for (int i = 0; i < tr.rank; ++i) {
        Poly r = combine(tr.rr.transform[i]).substitute(subst);
        if (!r.is_zero()) candidates.push_back(std::move(r));
    }

    for (int v = 0; v < V; ++v)
        if (!is_pivot[v]) ep.residual_vars.push_back(v);

    // Monic candidates with their W-weights, deduplicated, weight-ascending.
    std::vector<std::pair<Poly, long>> pool;
    auto mono_weight = [&](const Mono& m) {
        long w = 0;
        for (const auto& [v, e] : m) w += si.var_w[v] * e;
        return w;
    };
    for (auto& c : candidates) {
        if (c.is_zero()) continue;
        mpq_class lead = c.terms().begin()->second;
        Poly m = c.scaled(1 / lead);
        if (!m.quadratic_or_higher())
            throw InternalInvariantViolation("residual generator has linear or constant terms");
        if (!is_w_homogeneous(m, si.var_w))
            throw InternalInvariantViolation("residual generator is not W-homogeneous");
        if (std::none_of(pool.begin(), pool.end(), [&](const auto& q) { return q.first == m; }))
            pool.emplace_back(std::move(m), mono_weight(m.terms().begin()->first));
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });

    // Graded Nakayama: since the residual ideal is W-homogeneous with positive
    // weights, a candidate of weight w is redundant iff it lies in the span of
    // {m g : g kept, m a residual monomial with W(m) = w - W(g)}.
    std::vector<std::map<Mono, mpq_class>> basis;
    auto reduce = [&](std::map<Mono, mpq_class> v) {
        for (const auto& b : basis) {
            auto it = v.find(b.begin()->first);
            if (it == v.end()) continue;
            mpq_class f = it->second / b.begin()->second;
            for (const auto& [m, c] : b) {
                auto& slot = v[m];
                slot -= f * c;
                if (slot == 0) v.erase(m);
            }
        }
        return v;
    };
    auto insert_basis = [&](std::map<Mono, mpq_class> v) {
        v = reduce(std::move(v));
        if (v.empty()) return;
        for (auto& b : basis) {  // keep the basis inter-reduced
            auto it = b.find(v.begin()->first);
            if (it == b.end()) continue;
            mpq_class f = it->second / v.begin()->second;
            for (const auto& [m, c] : v) {
                auto& slot = b[m];
                slot -= f * c;
                if (slot == 0) b.erase(m);
            }
        }
        basis.push_back(std::move(v));
    };
    auto monos_of_weight = [&](long target) {
        std::vector<Poly> out;
        Mono cur;
        auto rec = [&](auto&& self, size_t idx, long rem) -> void {
            if (rem == 0) {
                Poly m;
                m.add_term(cur, 1);
                out.push_back(std::move(m));
                return;
            }
            if (idx == ep.residual_vars.size()) return;
            self(self, idx + 1, rem);
            int v = ep.residual_vars[idx];
            cur.push_back({v, 0});
            for (int e = 1; (long)e * si.var_w[v] <= rem; ++e) {
                cur.back().second = e;
                self(self, idx + 1, rem - (long)e * si.var_w[v]);
            }
            cur.pop_back();
        };
        rec(rec, 0, target);
        return out;
    };
    std::vector<Poly> residual;
    std::vector<long> residual_w;
    for (const auto& [c, w] : pool) {
        basis.clear();
        for (size_t i = 0; i < residual.size(); ++i)
            for (const Poly& m : monos_of_weight(w - residual_w[i]))
                insert_basis((m * residual[i]).terms());
        if (reduce(c.terms()).empty()) continue;
        residual.push_back(c);
        residual_w.push_back(w);
    }

    ep.residual_gens = std::move(residual);
    ep.substitutions = std::move(subst);
    ep.flat = ep.residual_gens.empty();

    // Alias letters in canonical (descending) order over the residual vars.
    ep.names.resize(V);
    static const char* letters = "abcdefghijklmnopqrstuvwxyz";
    int k = 0;
    for (int v : ep.residual_vars) {
        std::string nm;
        if (k < 26)
            nm = std::string(1, letters[k]);
        else
            nm = "v" + std::to_string(k);
        ++k;
        ep.names[v] = nm;
    }
    for (int p : tr.rr.pivots) ep.names[p] = si.vt.name(p);
    return ep;
}

}  // namespace grst
