#pragma once

#include <memory>
#include <optional>

#include "grstratum/ufamily.hpp"

namespace grst {

/// Provenance of one generator of the defining ideal.
struct GenTag {
    enum class Kind { a1, a2 } kind;
    Exponent base;  // alpha (a1) or eps (a2)
    int lam = 0;
    int mu = 0;  // a2 only
    Exponent beta;

    std::string str() const;
};

struct BuildOptions {
    Mode mode = Mode::full;
    std::optional<int> degree_override;
    std::vector<Exponent> script_d;  // explicit finite D subset (type mode)
};

/// The defining ideal A = A1 + A2 of the Groebner scheme, with everything the
/// downstream stages need (variable table, U-family, weight, triples).
class SchemeIdeal {
public:
    int n = 0;
    MonomialOrder ord = MonomialOrder::grlex(1);
    StandardSet ss;
    Mode mode = Mode::full;
    int D = 0;
    VarTable vt;
    WeightW weight;
    std::vector<long> var_w;  // W-weight per variable
    std::vector<EdgeTriple> triples;
    std::vector<std::pair<GenTag, Poly>> gens;
    std::shared_ptr<UFamily> ufam;
    std::shared_ptr<NuMap> nu;

    int count_a1() const;
    int count_a2() const;
};

/// Orchestrates: validate corners -> edge triples -> truncation degree ->
/// U-family -> A1 u A2 generators.
SchemeIdeal build_scheme(const std::vector<Exponent>& corners, int n, const MonomialOrder& ord,
                         const BuildOptions& opts = {});

/// The tautological family g_alpha = x^alpha - sum_beta T_{alpha,beta} x^beta,
/// as coefficient rows beta -> Poly (over R; reduce modulo A by substitution
/// downstream).
std::map<Exponent, std::map<Exponent, Poly>> universal_family(const SchemeIdeal& si);

}  // namespace grst
