#include "grstratum/oracle.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "grstratum/standard_set.hpp"

namespace grst {

void XPoly::add_term(const Exponent& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Exponent XPoly::leading_exponent(const MonomialOrder& ord) const {
    if (terms_.empty()) throw InternalInvariantViolation("leading exponent of zero polynomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || ord.less(*best, e)) best = &e;
    return *best;
}

mpq_class XPoly::leading_coeff(const MonomialOrder& ord) const {
    return terms_.at(leading_exponent(ord));
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XPoly XPoly::shifted(const Exponent& shift, const mpq_class& c) const {
    XPoly r;
    for (const auto& [e, k] : terms_) r.add_term(add(e, shift), k * c);
    return r;
}

std::string XPoly::render(const std::vector<std::string>& x_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class a = it->second;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool allzero = std::all_of(it->first.begin(), it->first.end(), [](int v) { return v == 0; });
        if (a != 1 || allzero) os << a.get_str();
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << x_names.at(i);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

DivisionResult divide(const XPoly& f, const std::vector<XPoly>& G, const MonomialOrder& ord) {
    DivisionResult res;
    res.quotients.resize(G.size());
    std::vector<Exponent> lead(G.size());
    for (size_t i = 0; i < G.size(); ++i) lead[i] = G[i].leading_exponent(ord);

    XPoly work = f;
    while (!work.is_zero()) {
        // largest reducible monomial of work
        const Exponent* target = nullptr;
        size_t div_idx = 0;
        for (const auto& [e, c] : work.terms()) {
            for (size_t i = 0; i < G.size(); ++i) {
                if (!divides(lead[i], e)) continue;
                if (!target || ord.less(*target, e)) {
                    target = &e;
                    div_idx = i;
                }
                break;
            }
        }
        if (!target) break;
        Exponent shift;
        sub(*target, lead[div_idx], shift);
        mpq_class c = work.terms().at(*target);  // divisors are monic
        res.quotients[div_idx].add_term(shift, c);
        work = work - G[div_idx].shifted(shift, c);
    }
    res.remainder = work;
    return res;
}

GBCertificate is_reduced_groebner(const std::vector<XPoly>& G, const std::vector<Exponent>& corners,
                                  const MonomialOrder& ord, int threads) {
    GBCertificate cert;
    auto fail = [&](const std::string& why) {
        cert.ok = false;
        cert.reason = why;
        return cert;
    };
    for (const auto& g : G)
        if (g.is_zero()) return fail("zero polynomial in basis");
    for (const auto& g : G)
        if (g.leading_coeff(ord) != 1)
            return fail("basis element not monic: leading coefficient " +
                        g.leading_coeff(ord).get_str());

    std::vector<Exponent> le;
    for (const auto& g : G) le.push_back(g.leading_exponent(ord));
    {
        auto sorted = le;
        std::sort(sorted.begin(), sorted.end());
        auto want = corners;
        std::sort(want.begin(), want.end());
        if (sorted != want) return fail("leading exponents do not equal the corner set");
    }
    StandardSet ss = StandardSet::validate_corners(corners, ord.dim());
    for (size_t i = 0; i < G.size(); ++i)
        for (const auto& [e, c] : G[i].terms()) {
            if (e == le[i]) continue;
            if (!ss.in_delta(e))
                return fail("non-leading monomial " + to_string(e) + " outside Delta in g_" +
                            to_string(le[i]));
        }

    // Buchberger: every S-pair reduces to zero.  Coprime leading monomials are
    // the single allowed skip, counted in the certificate.
    struct Pair { size_t i, j; };
    std::vector<Pair> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            bool coprime = true;
            for (int k = 0; k < ord.dim(); ++k)
                if (le[i][k] > 0 && le[j][k] > 0) coprime = false;
            if (coprime) {
                ++cert.skipped_coprime;
                continue;
            }
            pairs.push_back({i, j});
        }

    auto check_pair = [&](const Pair& p) -> bool {
        Exponent lcm(ord.dim());
        for (int k = 0; k < ord.dim(); ++k) lcm[k] = std::max(le[p.i][k], le[p.j][k]);
        Exponent si, sj;
        sub(lcm, le[p.i], si);
        sub(lcm, le[p.j], sj);
        XPoly s = G[p.i].shifted(si, 1) - G[p.j].shifted(sj, 1);
        return divide(s, G, ord).remainder.is_zero();
    };

    std::vector<char> ok(pairs.size(), 1);
    if (threads > 1 && pairs.size() > 1) {
        std::vector<std::future<void>> futs;
        std::atomic<size_t> next{0};
        int nw = std::min<int>(threads, (int)pairs.size());
        for (int w = 0; w < nw; ++w)
            futs.push_back(std::async(std::launch::async, [&]() {
                for (size_t k = next++; k < pairs.size(); k = next++) ok[k] = check_pair(pairs[k]);
            }));
        for (auto& f : futs) f.get();
    } else {
        for (size_t k = 0; k < pairs.size(); ++k) ok[k] = check_pair(pairs[k]);
    }
    cert.checked_pairs = (int)pairs.size();
    for (size_t k = 0; k < pairs.size(); ++k)
        if (!ok[k])
            return fail("S-polynomial of (" + to_string(le[pairs[k].i]) + ", " +
                        to_string(le[pairs[k].j]) + ") does not reduce to zero");
    return cert;
}

}  // namespace grst
