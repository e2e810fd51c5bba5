#include "grstratum/standard_set.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grst {

namespace {

// Enumerate all points of the box [0,hi_1] x ... x [0,hi_n], calling f on each.
template <typename F>
void scan_box(const std::vector<int>& hi, F&& f) {
    int n = (int)hi.size();
    Exponent cur(n, 0);
    while (true) {
        f(cur);
        int i = 0;
        while (i < n && cur[i] == hi[i]) cur[i++] = 0;
        if (i == n) return;
        ++cur[i];
    }
}

// Enumerate all points of degree <= D, calling f on each.
template <typename F>
void scan_degree(int n, int D, F&& f) {
    Exponent cur(n, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n - 1) {
            for (int v = 0; v <= rem; ++v) {
                cur[i] = v;
                f(cur);
            }
            cur[i] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
        cur[i] = 0;
    };
    if (n == 0) return;
    rec(rec, 0, D);
}

}  // namespace

StandardSet StandardSet::validate_corners(std::vector<Exponent> corners, int n) {
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    for (const auto& a : corners)
        if ((int)a.size() != n) throw DimensionMismatch("corner has wrong dimension");
    for (const auto& a : corners)
        for (const auto& b : corners)
            if (a != b && divides(a, b))
                throw AntichainViolation("corner " + to_string(a) + " divides " + to_string(b));

    StandardSet ss;
    ss.n_ = n;
    ss.corners_ = std::move(corners);
    ss.theta_.assign(n, 0);
    for (const auto& a : ss.corners_)
        for (int i = 0; i < n; ++i) ss.theta_[i] = std::max(ss.theta_[i], a[i]);
    ss.edge_bound_ = n;
    for (int t : ss.theta_) ss.edge_bound_ += t;
    return ss;
}

StandardSet::Region StandardSet::membership(const Exponent& b) const {
    if ((int)b.size() != n_) throw DimensionMismatch("membership: dimension mismatch");
    bool outside = false;
    for (const auto& c : corners_)
        if (divides(c, b)) {
            outside = true;
            break;
        }
    if (!outside) return Region::in_delta;
    // border iff some b - e_i lies in Delta
    Exponent down;
    for (int i = 0; i < n_; ++i) {
        if (b[i] == 0) continue;
        down = b;
        --down[i];
        bool div = false;
        for (const auto& c : corners_)
            if (divides(c, down)) {
                div = true;
                break;
            }
        if (!div) return Region::in_border;
    }
    return Region::outside;
}

bool StandardSet::finite_delta() const {
    for (int i = 0; i < n_; ++i) {
        bool pure = false;
        for (const auto& c : corners_) {
            bool p = c[i] > 0;
            for (int j = 0; p && j < n_; ++j)
                if (j != i && c[j] != 0) p = false;
            if (p) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<Exponent> StandardSet::enumerate_delta_upto(int D, const MonomialOrder& ord) const {
    std::vector<Exponent> out;
    scan_degree(n_, D, [&](const Exponent& b) {
        if (membership(b) == Region::in_delta) out.push_back(b);
    });
    std::sort(out.begin(), out.end(),
              [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); });
    return out;
}

std::vector<Exponent> StandardSet::enumerate_border_upto(int D, const MonomialOrder& ord) const {
    std::vector<Exponent> out;
    scan_degree(n_, D, [&](const Exponent& b) {
        if (membership(b) == Region::in_border) out.push_back(b);
    });
    std::sort(out.begin(), out.end(),
              [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); });
    return out;
}

std::vector<Exponent> StandardSet::corners_of_delta_union_border() const {
    // Sound inside the box eta_i <= theta_i + 1.
    std::vector<int> hi(n_);
    for (int i = 0; i < n_; ++i) hi[i] = theta_[i] + 1;
    std::vector<Exponent> out;
    Exponent down;
    scan_box(hi, [&](const Exponent& eta) {
        if (membership(eta) != Region::outside) return;
        for (int i = 0; i < n_; ++i) {
            if (eta[i] == 0) continue;
            down = eta;
            --down[i];
            if (membership(down) == Region::outside) return;
        }
        out.push_back(eta);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeTriple> StandardSet::edge_triples() const {
    std::set<Exponent> cub;
    {
        auto v = corners_of_delta_union_border();
        cub.insert(v.begin(), v.end());
    }
    // Group candidates by their apex eps + lam + mu in C(Delta u B(Delta)); a
    // lam == mu triple yields a vacuous relation, so it is recorded only when
    // the apex admits no two-direction decomposition.
    std::map<Exponent, std::set<EdgeTriple>> by_apex;
    int bound = std::max(edge_bound_ - 2, 0);
    scan_degree(n_, bound, [&](const Exponent& eps) {
        if (membership(eps) != Region::in_delta) return;
        for (int l = 0; l < n_; ++l) {
            Exponent el = eps;
            ++el[l];
            if (membership(el) != Region::in_border) continue;
            for (int m = l; m < n_; ++m) {
                Exponent em = eps;
                ++em[m];
                if (membership(em) != Region::in_border) continue;
                Exponent elm = el;
                ++elm[m];
                if (cub.count(elm)) by_apex[elm].insert(EdgeTriple{eps, l, m});
            }
        }
    });
    std::set<EdgeTriple> out;
    for (const auto& [apex, ts] : by_apex) {
        bool mixed = std::any_of(ts.begin(), ts.end(),
                                 [](const EdgeTriple& t) { return t.lam != t.mu; });
        for (const auto& t : ts)
            if (t.lam != t.mu || !mixed) out.insert(t);
    }
    return {out.begin(), out.end()};
}

}  // namespace grst
