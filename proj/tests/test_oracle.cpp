#include <doctest.h>

#include "grstratum/oracle.hpp"

using namespace grst;

namespace {

XPoly mono(const Exponent& e, const mpq_class& c = 1) {
    XPoly p;
    p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("division: x^2 y by {xy - z} leaves xz") {
    auto ord = MonomialOrder::grlex(3);
    XPoly f = mono({2, 1, 0});
    XPoly g = mono({1, 1, 0}) - mono({0, 0, 1});
    auto res = divide(f, {g}, ord);
    CHECK(res.remainder == mono({1, 0, 1}));
    CHECK(res.quotients[0] == mono({1, 0, 0}));
}

TEST_CASE("division invariant f = sum q_i g_i + r with irreducible remainder") {
    auto ord = MonomialOrder::grlex(2);
    XPoly g1 = mono({2, 0}) - mono({0, 1});               // x^2 - y
    XPoly g2 = mono({1, 1}) - mono({1, 0});               // xy - x
    XPoly f = mono({3, 1}) + mono({0, 2}, mpq_class(1, 2)) - mono({1, 0}, 3);
    auto res = divide(f, {g1, g2}, ord);
    XPoly recon = res.remainder;
    std::vector<XPoly> G = {g1, g2};
    for (size_t i = 0; i < G.size(); ++i)
        for (const auto& [e, c] : res.quotients[i].terms()) recon = recon + G[i].shifted(e, c);
    CHECK(recon == f);
    for (const auto& [e, c] : res.remainder.terms()) {
        CHECK_FALSE(divides(g1.leading_exponent(ord), e));
        CHECK_FALSE(divides(g2.leading_exponent(ord), e));
    }
}

TEST_CASE("the monomial basis itself certifies") {
    std::vector<Exponent> corners = {{1, 1, 0}, {1, 0, 1}};
    std::vector<XPoly> G;
    for (const auto& c : corners) G.push_back(mono(c));
    auto cert = is_reduced_groebner(G, corners, MonomialOrder::grlex(3), 1);
    CHECK(cert.ok);
    CHECK(cert.checked_pairs + cert.skipped_coprime == 1);
}

TEST_CASE("a classical reduced basis certifies, a broken one does not") {
    auto ord = MonomialOrder::grlex(2);
    // I = <x^2 - y, xy - x>: reduced GB is {x^2 - y, xy - x, y^2 - y}
    std::vector<Exponent> corners = {{2, 0}, {1, 1}, {0, 2}};
    XPoly g1 = mono({2, 0}) - mono({0, 1});
    XPoly g2 = mono({1, 1}) - mono({1, 0});
    XPoly g3 = mono({0, 2}) - mono({0, 1});
    CHECK(is_reduced_groebner({g1, g2, g3}, corners, ord).ok);
    CHECK(is_reduced_groebner({g1, g2, g3}, corners, ord, 4).ok);

    // wrong third element: S-pair fails
    XPoly bad = mono({0, 2}) - mono({1, 0});
    auto cert = is_reduced_groebner({g1, g2, bad}, corners, ord);
    CHECK_FALSE(cert.ok);
    CHECK(cert.reason.find("S-polynomial") != std::string::npos);

    // leading exponents must equal the corners
    auto cert2 = is_reduced_groebner({g1, g2}, corners, ord);
    CHECK_FALSE(cert2.ok);

    // non-monic element
    auto cert3 = is_reduced_groebner({g1.shifted({0, 0}, 2), g2, g3}, corners, ord);
    CHECK_FALSE(cert3.ok);

    // non-leading support must lie in Delta
    XPoly tail = mono({1, 1}) - mono({2, 0});  // x^2 is not in Delta
    auto cert4 = is_reduced_groebner({g1, tail, g3}, corners, ord);
    CHECK_FALSE(cert4.ok);
}

TEST_CASE("rendering x-polynomials") {
    XPoly p = mono({1, 1, 0}) - mono({0, 2, 0}, mpq_class(1, 3)) + mono({0, 0, 0}, -2);
    CHECK(p.render({"x", "y", "z"}) == "xy - 1/3y^2 - 2");
}
