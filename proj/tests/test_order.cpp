#include <doctest.h>

#include <algorithm>

#include "grstratum/order.hpp"

using namespace grst;

namespace {

// Textbook comparators, written independently of the weight-matrix route.
int ref_lex(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int ref_grlex(const Exponent& a, const Exponent& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b) ? -1 : 1;
    return ref_lex(a, b);
}

int ref_grevlex(const Exponent& a, const Exponent& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b) ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

std::vector<Exponent> box3(int dmax) {
    std::vector<Exponent> out;
    for (int i = 0; i <= dmax; ++i)
        for (int j = 0; j + i <= dmax; ++j)
            for (int k = 0; k + i + j <= dmax; ++k) out.push_back({i, j, k});
    return out;
}

}  // namespace

TEST_CASE("lex, grlex, grevlex agree with the naive comparators on the degree-4 box") {
    auto pts = box3(4);
    auto lex = MonomialOrder::lex(3);
    auto grlex = MonomialOrder::grlex(3);
    auto grevlex = MonomialOrder::grevlex(3);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            CHECK(lex.compare(a, b) == ref_lex(a, b));
            CHECK(grlex.compare(a, b) == ref_grlex(a, b));
            CHECK(grevlex.compare(a, b) == ref_grevlex(a, b));
        }
}

TEST_CASE("classic grlex/grevlex separations") {
    auto grlex = MonomialOrder::grlex(3);
    auto grevlex = MonomialOrder::grevlex(3);
    // x y^2 z vs x^2 z: degrees 4 vs 3
    CHECK(grlex.less(Exponent{2, 0, 1}, Exponent{1, 2, 1}));
    // x^2 y z vs x y^3: same degree, grlex by x, grevlex by the last exponent
    CHECK(grlex.compare(Exponent{2, 1, 1}, Exponent{1, 3, 0}) > 0);
    CHECK(grevlex.compare(Exponent{2, 1, 1}, Exponent{1, 3, 0}) < 0);
}

TEST_CASE("order axioms on sampled points") {
    auto pts = box3(3);
    for (auto* ordp : {new MonomialOrder(MonomialOrder::lex(3)),
                       new MonomialOrder(MonomialOrder::grlex(3)),
                       new MonomialOrder(MonomialOrder::grevlex(3))}) {
        const auto& ord = *ordp;
        Exponent zero(3, 0);
        for (const auto& a : pts) {
            CHECK(ord.compare(a, a) == 0);
            if (a != zero) CHECK(ord.less(zero, a));  // well order: 1 is minimal
            for (const auto& b : pts) {
                CHECK(ord.compare(a, b) == -ord.compare(b, a));
                // translation invariance
                CHECK(ord.compare(add(a, Exponent{1, 0, 2}), add(b, Exponent{1, 0, 2})) ==
                      ord.compare(a, b));
            }
        }
        delete ordp;
    }
}

TEST_CASE("priority permutation reorders the variables") {
    // z > y > x lex
    auto ord = MonomialOrder::lex(3, {2, 1, 0});
    CHECK(ord.less(Exponent{5, 0, 0}, Exponent{0, 0, 1}));
    CHECK(ord.less(Exponent{1, 0, 1}, Exponent{0, 2, 1}));
}

TEST_CASE("matrix orders and ties") {
    auto ord = MonomialOrder::matrix(2, {{1, 1}, {1, 0}});  // grlex in matrix form
    auto grlex = MonomialOrder::grlex(2);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                for (int l = 0; l <= 3; ++l)
                    CHECK(ord.compare({i, j}, {k, l}) == grlex.compare({i, j}, {k, l}));

    auto degenerate = MonomialOrder::matrix(2, {{1, 1}});
    CHECK(degenerate.compare({1, 0}, {0, 2}) < 0);
    CHECK_THROWS_AS(degenerate.compare({1, 0}, {0, 1}), OrderTieError);
}

TEST_CASE("gradedness detection") {
    CHECK(MonomialOrder::grlex(3).is_graded());
    CHECK(MonomialOrder::grevlex(3).is_graded());
    CHECK_FALSE(MonomialOrder::lex(3).is_graded());
    CHECK(MonomialOrder::lex(1).is_graded());
    CHECK(MonomialOrder::matrix(2, {{1, 1}, {1, 0}}).is_graded());
    CHECK_FALSE(MonomialOrder::matrix(2, {{1, 2}, {1, 0}}).is_graded());
}

TEST_CASE("exponent helpers") {
    CHECK(degree(Exponent{1, 2, 0}) == 3);
    CHECK(add(Exponent{1, 2}, Exponent{0, 3}) == Exponent{1, 5});
    Exponent d;
    CHECK(sub(Exponent{2, 1}, Exponent{1, 1}, d));
    CHECK(d == Exponent{1, 0});
    CHECK_FALSE(sub(Exponent{2, 0}, Exponent{1, 1}, d));
    CHECK(divides(Exponent{1, 0, 1}, Exponent{2, 0, 1}));
    CHECK_FALSE(divides(Exponent{1, 2, 0}, Exponent{2, 1, 3}));
    CHECK(unit(3, 1) == Exponent{0, 1, 0});
}
