#pragma once

#include <vector>

#include "grstratum/order.hpp"

namespace grst {

/// An edge triple (eps; e_lam, e_mu) of a standard set, normalized lam <= mu.
struct EdgeTriple {
    Exponent eps;
    int lam = 0;
    int mu = 0;

    friend bool operator==(const EdgeTriple&, const EdgeTriple&) = default;
    friend auto operator<=>(const EdgeTriple&, const EdgeTriple&) = default;
};

/// A standard set Delta, given by its (finite) corner set.  Delta itself may
/// be infinite and is never materialized; only predicates and degree-bounded
/// enumerations are exposed.
class StandardSet {
public:
    enum class Region { in_delta, in_border, outside };

    StandardSet() = default;

    /// Validates the corner antichain.  An empty corner set means Delta = N^n
    /// (the zero ideal); the single corner 0 means Delta is empty (unit ideal).
    static StandardSet validate_corners(std::vector<Exponent> corners, int n);

    int dim() const { return n_; }
    const std::vector<Exponent>& corners() const { return corners_; }
    const std::vector<int>& theta() const { return theta_; }
    /// L = sum theta_i + n, the degree bound on corners of Delta u B(Delta).
    int edge_bound() const { return edge_bound_; }

    Region membership(const Exponent& b) const;
    bool in_delta(const Exponent& b) const { return membership(b) == Region::in_delta; }

    /// True iff Delta is finite (each axis carries a pure-power corner).
    bool finite_delta() const;

    /// All beta in Delta with |beta| <= D, ascending by ord.
    std::vector<Exponent> enumerate_delta_upto(int D, const MonomialOrder& ord) const;
    /// All beta in B(Delta) with |beta| <= D, ascending by ord.
    std::vector<Exponent> enumerate_border_upto(int D, const MonomialOrder& ord) const;

    /// The corner set of Delta u B(Delta), found inside the box eta_i <= theta_i + 1.
    std::vector<Exponent> corners_of_delta_union_border() const;

    /// All edge triples (eps; lam, mu), lam <= mu, sorted.
    std::vector<EdgeTriple> edge_triples() const;

private:
    int n_ = 0;
    std::vector<Exponent> corners_;
    std::vector<int> theta_;
    int edge_bound_ = 0;
};

}  // namespace grst
