#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "grstratum/standard_set.hpp"

using namespace grst;

namespace {

const std::vector<Exponent> kDelta1Corners = {{3, 0, 0}, {2, 1, 0}, {1, 0, 1}, {0, 0, 2}};

bool brute_in_ideal(const std::vector<Exponent>& corners, const Exponent& b) {
    return std::any_of(corners.begin(), corners.end(),
                       [&](const Exponent& c) { return divides(c, b); });
}

// Brute-force region classifier from the definitions alone.
StandardSet::Region brute_region(const std::vector<Exponent>& corners, const Exponent& b) {
    if (!brute_in_ideal(corners, b)) return StandardSet::Region::in_delta;
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        Exponent d = b;
        --d[i];
        if (!brute_in_ideal(corners, d)) return StandardSet::Region::in_border;
    }
    return StandardSet::Region::outside;
}

std::vector<Exponent> box(const std::vector<int>& hi) {
    std::vector<Exponent> out{{Exponent(hi.size(), 0)}};
    for (size_t i = 0; i < hi.size(); ++i) {
        std::vector<Exponent> next;
        for (const auto& e : out)
            for (int v = 0; v <= hi[i]; ++v) {
                Exponent f = e;
                f[i] = v;
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("corner validation") {
    CHECK_THROWS_AS(StandardSet::validate_corners({{1, 0}, {2, 1}}, 2), AntichainViolation);
    CHECK_THROWS_AS(StandardSet::validate_corners({{1, 0, 0}}, 2), DimensionMismatch);
    // duplicates collapse, order does not matter
    auto ss = StandardSet::validate_corners({{0, 2}, {1, 0}, {1, 0}}, 2);
    CHECK(ss.corners() == std::vector<Exponent>{{0, 2}, {1, 0}});
    // J = 0 and J = (1)
    auto zero = StandardSet::validate_corners({}, 2);
    CHECK(zero.in_delta({5, 7}));
    CHECK(zero.edge_triples().empty());
    auto unitideal = StandardSet::validate_corners({{0, 0}}, 2);
    CHECK_FALSE(unitideal.in_delta({0, 0}));
    CHECK(unitideal.edge_triples().empty());
}

TEST_CASE("membership matches the brute-force classifier on Delta1") {
    auto ss = StandardSet::validate_corners(kDelta1Corners, 3);
    CHECK(ss.theta() == std::vector<int>{3, 1, 2});
    CHECK(ss.edge_bound() == 9);
    CHECK_FALSE(ss.finite_delta());  // no pure power of y
    for (const auto& b : box({5, 4, 4}))
        CHECK(ss.membership(b) == brute_region(kDelta1Corners, b));
}

TEST_CASE("degree-bounded enumerations partition the box") {
    auto ss = StandardSet::validate_corners(kDelta1Corners, 3);
    auto ord = MonomialOrder::grlex(3);
    auto del = ss.enumerate_delta_upto(4, ord);
    auto bor = ss.enumerate_border_upto(4, ord);
    CHECK(std::is_sorted(del.begin(), del.end(),
                         [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); }));
    CHECK(std::is_sorted(bor.begin(), bor.end(),
                         [&](const Exponent& a, const Exponent& b) { return ord.less(a, b); }));
    std::set<Exponent> ds(del.begin(), del.end()), bs(bor.begin(), bor.end());
    int outside = 0, total = 0;
    for (const auto& b : box({4, 4, 4})) {
        if (degree(b) > 4) continue;
        ++total;
        auto r = brute_region(kDelta1Corners, b);
        CHECK(ds.count(b) == (r == StandardSet::Region::in_delta));
        CHECK(bs.count(b) == (r == StandardSet::Region::in_border));
        if (r == StandardSet::Region::outside) ++outside;
    }
    CHECK(total == (int)(ds.size() + bs.size()) + outside);
    // corners are border elements
    for (const auto& c : ss.corners()) CHECK(bs.count(c) == 1);
}

TEST_CASE("corners of Delta u B(Delta), brute force") {
    for (const auto& corners : {kDelta1Corners,
                                std::vector<Exponent>{{2, 0, 0}, {1, 1, 0}, {0, 3, 0}, {0, 0, 1}},
                                std::vector<Exponent>{{1, 1, 0}, {1, 0, 1}}}) {
        auto ss = StandardSet::validate_corners(corners, 3);
        std::vector<int> hi;
        for (int t : ss.theta()) hi.push_back(t + 2);
        std::vector<Exponent> expect;
        for (const auto& b : box(hi)) {
            if (brute_region(corners, b) != StandardSet::Region::outside) continue;
            bool minimal = true;
            for (size_t i = 0; i < b.size() && minimal; ++i) {
                if (b[i] == 0) continue;
                Exponent d = b;
                --d[i];
                if (brute_region(corners, d) == StandardSet::Region::outside) minimal = false;
            }
            if (minimal) expect.push_back(b);
        }
        std::sort(expect.begin(), expect.end());
        auto got = ss.corners_of_delta_union_border();
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
}

TEST_CASE("one-variable cases") {
    auto ss = StandardSet::validate_corners({{1}}, 1);
    CHECK(ss.corners_of_delta_union_border() == std::vector<Exponent>{{2}});
    auto ts = ss.edge_triples();
    REQUIRE(ts.size() == 1);
    CHECK(ts[0] == EdgeTriple{{0}, 0, 0});
}

TEST_CASE("edge triples of Delta1 are the seven known ones") {
    auto ss = StandardSet::validate_corners(kDelta1Corners, 3);
    std::vector<EdgeTriple> expect = {
        {{0, 0, 1}, 2, 2}, {{0, 0, 1}, 0, 2}, {{1, 1, 0}, 0, 2}, {{2, 0, 0}, 0, 0},
        {{2, 0, 0}, 0, 1}, {{2, 0, 0}, 0, 2}, {{2, 0, 0}, 1, 2}};
    std::sort(expect.begin(), expect.end());
    auto got = ss.edge_triples();
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
}

TEST_CASE("edge triples match a full box scan on random antichains") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + (int)(rng() % 2);
        // random antichain: sample monomials, keep the minimal ones
        std::vector<Exponent> pool;
        int k = 2 + (int)(rng() % 3);
        for (int i = 0; i < k; ++i) {
            Exponent e(n);
            for (int j = 0; j < n; ++j) e[j] = coord(rng);
            if (degree(e) == 0) continue;
            pool.push_back(e);
        }
        std::vector<Exponent> corners;
        for (const auto& a : pool) {
            bool minimal = std::none_of(pool.begin(), pool.end(), [&](const Exponent& b) {
                return b != a && divides(b, a);
            });
            if (minimal) corners.push_back(a);
        }
        if (corners.empty()) continue;
        auto ss = StandardSet::validate_corners(corners, n);

        std::vector<int> hi;
        for (int t : ss.theta()) hi.push_back(t + 1);
        std::map<Exponent, std::set<EdgeTriple>> by_apex;
        auto cdub = ss.corners_of_delta_union_border();
        std::set<Exponent> cd(cdub.begin(), cdub.end());
        for (const auto& eps : box(hi)) {
            if (brute_region(corners, eps) != StandardSet::Region::in_delta) continue;
            for (int l = 0; l < n; ++l)
                for (int m = l; m < n; ++m) {
                    Exponent el = eps, em = eps, s = eps;
                    ++el[l];
                    ++em[m];
                    ++s[l];
                    ++s[m];
                    if (brute_region(corners, el) != StandardSet::Region::in_border) continue;
                    if (brute_region(corners, em) != StandardSet::Region::in_border) continue;
                    if (!cd.count(s)) continue;
                    by_apex[s].insert(EdgeTriple{eps, l, m});
                }
        }
        std::set<EdgeTriple> expect;
        for (const auto& [apex, ts] : by_apex) {
            bool mixed = std::any_of(ts.begin(), ts.end(),
                                     [](const EdgeTriple& t) { return t.lam != t.mu; });
            for (const auto& t : ts)
                if (t.lam != t.mu || !mixed) expect.insert(t);
        }
        auto got = ss.edge_triples();
        CHECK(std::set<EdgeTriple>(got.begin(), got.end()) == expect);
        for (const auto& t : got) CHECK(degree(t.eps) <= ss.edge_bound() - 2);
    }
}
