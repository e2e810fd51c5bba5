#pragma once

#include <gmpxx.h>

#include <map>

#include "grstratum/order.hpp"

namespace grst {

/// Sparse polynomial in the x-variables over Q.
class XPoly {
public:
    XPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }

    void add_term(const Exponent& e, const mpq_class& c);

    Exponent leading_exponent(const MonomialOrder& ord) const;
    mpq_class leading_coeff(const MonomialOrder& ord) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    /// Multiply by c * x^shift.
    XPoly shifted(const Exponent& shift, const mpq_class& c) const;

    friend bool operator==(const XPoly&, const XPoly&) = default;

    std::string render(const std::vector<std::string>& x_names) const;

private:
    std::map<Exponent, mpq_class> terms_;
};

struct DivisionResult {
    std::vector<XPoly> quotients;
    XPoly remainder;
};

/// Division by a list of monic divisors; always reduces the largest reducible
/// monomial of the working polynomial.
DivisionResult divide(const XPoly& f, const std::vector<XPoly>& G, const MonomialOrder& ord);

struct GBCertificate {
    bool ok = true;
    std::string reason;           // first failing condition or S-pair
    int skipped_coprime = 0;      // S-pairs skipped by the coprime-LM criterion
    int checked_pairs = 0;
};

/// True iff G is the reduced Groebner basis shape for the given corners:
/// leading exponents equal the corners, non-leading support lies in Delta,
/// and every S-polynomial reduces to zero modulo G.
GBCertificate is_reduced_groebner(const std::vector<XPoly>& G, const std::vector<Exponent>& corners,
                                  const MonomialOrder& ord, int threads = 1);

}  // namespace grst
