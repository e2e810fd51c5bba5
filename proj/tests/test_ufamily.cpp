#include <doctest.h>

#include "grstratum/scheme.hpp"

using namespace grst;

namespace {

const std::vector<Exponent> kEx1 = {{1, 1, 0}, {1, 0, 1}};
const std::vector<Exponent> kDelta1 = {{3, 0, 0}, {2, 1, 0}, {1, 0, 1}, {0, 0, 2}};

// Right-hand side of the condition-(5) recursion in direction d.
UFamily::Row recursion_row(const UFamily& U, const StandardSet& ss, const Exponent& alpha, int d) {
    Exponent prev = alpha;
    --prev[d];
    UFamily::Row out;
    for (const auto& [gamma, c] : U.row(prev)) {
        Exponent g2 = gamma;
        ++g2[d];
        if (ss.in_delta(g2)) {
            out[g2] += c;
            if (out[g2].is_zero()) out.erase(g2);
        } else {
            for (const auto& [beta, inner] : U.row(g2)) {
                out[beta] += c * inner;
                if (out[beta].is_zero()) out.erase(beta);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("extension family satisfies the five defining conditions") {
    for (const auto& corners : {kEx1, kDelta1}) {
        auto si = build_scheme(corners, 3, MonomialOrder::grlex(3));
        const UFamily& U = *si.ufam;
        // (1) identity on Delta
        CHECK(U.entry({0, 1, 0}, {0, 1, 0}) == Poly::constant(1));
        CHECK(U.entry({0, 1, 0}, {0, 0, 1}) == Poly());
        for (const auto& [alpha, row] : U.stored_rows()) {
            CHECK(si.ss.membership(alpha) == StandardSet::Region::in_border);
            bool corner = std::binary_search(si.ss.corners().begin(), si.ss.corners().end(), alpha);
            for (const auto& [beta, p] : row) {
                CHECK(si.ss.in_delta(beta));
                // (3) entries only below alpha
                CHECK(si.ord.less(beta, alpha));
                // (4) rows are finite and sparse by construction
                CHECK_FALSE(p.is_zero());
                // (2) corners carry the parameter variables
                if (corner) {
                    auto v = si.vt.find(alpha, beta);
                    REQUIRE(v);
                    CHECK(p == Poly::variable(*v));
                }
            }
            if (corner)
                for (int i = 0; i < si.vt.size(); ++i)
                    if (si.vt.var(i).alpha == alpha) CHECK(row.count(si.vt.var(i).beta) == 1);
            // (5) the defining recursion along the chosen nu direction
            if (!corner) CHECK(recursion_row(U, si.ss, alpha, si.nu->at(alpha)) == row);
        }
    }
}

TEST_CASE("hand-computed entry: U_{x^2 y, x^2} = T_{xy,x} for <xy,xz>") {
    auto si = build_scheme(kEx1, 3, MonomialOrder::grlex(3));
    auto v = si.vt.find({1, 1, 0}, {1, 0, 0});
    REQUIRE(v);
    CHECK(si.ufam->entry({2, 1, 0}, {2, 0, 0}) == Poly::variable(*v));
    // and the row of a corner is exactly its parameter variables
    auto vy2 = si.vt.find({1, 1, 0}, {0, 2, 0});
    REQUIRE(vy2);
    CHECK(si.ufam->entry({1, 1, 0}, {0, 2, 0}) == Poly::variable(*vy2));
}

TEST_CASE("nu picks a direction staying inside the border") {
    auto ss = StandardSet::validate_corners(kDelta1, 3);
    NuMap nu(&ss);
    for (const Exponent& a : ss.enumerate_border_upto(4, MonomialOrder::grlex(3))) {
        if (std::binary_search(ss.corners().begin(), ss.corners().end(), a)) continue;
        int d = nu.at(a);
        Exponent down = a;
        --down[d];
        CHECK(ss.membership(down) == StandardSet::Region::in_border);
    }
}

TEST_CASE("rows beyond the truncation degree are refused") {
    auto si = build_scheme(kEx1, 3, MonomialOrder::grlex(3));
    Exponent big{1, 1, 0};
    big[1] += si.D;  // x y^{D+1} is still in the border
    REQUIRE(si.ss.membership(big) == StandardSet::Region::in_border);
    CHECK_THROWS_AS(si.ufam->row(big), TruncationTooSmall);
}

TEST_CASE("building twice is deterministic") {
    auto a = build_scheme(kDelta1, 3, MonomialOrder::grlex(3));
    auto b = build_scheme(kDelta1, 3, MonomialOrder::grlex(3));
    REQUIRE(a.gens.size() == b.gens.size());
    for (size_t i = 0; i < a.gens.size(); ++i) {
        CHECK(a.gens[i].first.str() == b.gens[i].first.str());
        CHECK(a.gens[i].second == b.gens[i].second);
    }
    CHECK(a.ufam->stored_rows() == b.ufam->stored_rows());
}
