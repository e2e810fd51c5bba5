#pragma once

#include <map>

#include "grstratum/poly.hpp"
#include "grstratum/standard_set.hpp"

namespace grst {

enum class Mode { full, homogeneous, type_d };

std::string mode_name(Mode m);

/// Direction map nu : B(Delta) \ C(Delta) -> E with alpha - nu(alpha) in B(Delta).
/// Deterministic: smallest canonical index works first.
class NuMap {
public:
    explicit NuMap(const StandardSet* ss) : ss_(ss) {}

    /// Direction for a non-corner border element (computed and cached).
    int at(const Exponent& alpha) const;

    const std::map<Exponent, int>& known() const { return dir_; }

private:
    const StandardSet* ss_;
    mutable std::map<Exponent, int> dir_;
};

/// The truncated family { U_{alpha,beta} } of polynomials extending the corner
/// parameters T_{alpha,beta} to the whole border: U is the identity on Delta,
/// the T-variables on corners, and follows the nu-direction product recursion
/// on the rest of the border.
class UFamily {
public:
    using Row = std::map<Exponent, Poly>;  // beta -> nonzero entry

    UFamily(const StandardSet* ss, const MonomialOrder* ord, const VarTable* vt, NuMap nu,
            Mode mode, int trunc_degree, bool capped);

    /// Row of entries for alpha in B(Delta) (computed and memoized).  Throws
    /// TruncationTooSmall if a capped build needs a degree above the bound.
    const Row& row(const Exponent& alpha) const;

    /// U_{alpha,beta} for alpha in Delta u B(Delta).
    Poly entry(const Exponent& alpha, const Exponent& beta) const;

    /// Populate every row with |alpha| <= trunc ascending by the order.
    void populate();

    int trunc_degree() const { return trunc_; }
    Mode mode() const { return mode_; }
    const NuMap& nu() const { return nu_; }
    const std::map<Exponent, Row>& stored_rows() const { return rows_; }
    const VarTable& var_table() const { return *vt_; }
    const StandardSet& standard_set() const { return *ss_; }
    const MonomialOrder& order() const { return *ord_; }

private:
    const StandardSet* ss_;
    const MonomialOrder* ord_;
    const VarTable* vt_;
    NuMap nu_;
    Mode mode_;
    int trunc_;
    bool capped_;
    mutable std::map<Exponent, Row> rows_;
};

}  // namespace grst
