#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grstratum/order.hpp"

namespace grst {

/// A parameter variable T_{alpha,beta}: alpha a corner, beta in Delta, beta < alpha.
struct TVar {
    Exponent alpha;
    Exponent beta;

    friend bool operator==(const TVar&, const TVar&) = default;
};

/// Registry of the session's T-variables.  Index 0 is the largest variable
/// under the canonical sort (alpha descending by the order, then beta
/// descending); alias letters a, b, c, ... follow this same order restricted
/// to residual variables.
class VarTable {
public:
    VarTable() = default;
    VarTable(std::vector<TVar> vars, const MonomialOrder& ord);

    int size() const { return (int)vars_.size(); }
    const TVar& var(int i) const { return vars_[i]; }
    const std::vector<TVar>& vars() const { return vars_; }

    /// Index of T_{alpha,beta}, or nullopt if no such variable exists.
    std::optional<int> find(const Exponent& alpha, const Exponent& beta) const;

    std::string name(int i) const;

private:
    std::vector<TVar> vars_;
    std::map<std::pair<Exponent, Exponent>, int> index_;
};

/// Multidegree in T-variables: sorted (var, exponent) pairs, exponents > 0.
using Mono = std::vector<std::pair<int, int>>;

int total_degree(const Mono& m);

/// Sparse multivariate polynomial over Q in the T-variables.
class Poly {
public:
    Poly() = default;
    static Poly constant(const mpq_class& c);
    static Poly variable(int v);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, mpq_class>& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Simultaneous substitution of all bound variables.
    Poly substitute(const std::map<int, Poly>& bindings) const;

    /// Sum of total-degree-1 terms (constant term excluded).
    Poly linear_component() const;
    mpq_class constant_term() const;
    /// True iff every term has total degree >= 2.
    bool quadratic_or_higher() const;

    mpq_class eval(const std::vector<mpq_class>& point) const;

    mpq_class coeff(const Mono& m) const;
    void add_term(const Mono& m, const mpq_class& c);

    /// Largest variable index occurring, or -1.
    int max_var() const;
    bool uses_var(int v) const;

    std::string render(const std::vector<std::string>& var_names) const;

private:
    std::map<Mono, mpq_class> terms_;
};

/// Positive weight vector w realizing the order on a finite set:
/// a < b iff a.w < b.w; induces W(T_{alpha,beta}) = (alpha-beta).w > 0.
struct WeightW {
    std::vector<long> w;

    long weight_of(const Exponent& a) const;
};

/// Positive weight compatible with the order: searches w = sum M^{m-1-i} u_i over the order's
/// defining rows, doubling M until w is positive and separates pts correctly.
WeightW build_weight(const MonomialOrder& ord, const std::vector<Exponent>& pts);

/// Per-variable W-weights for a var table.
std::vector<long> var_weights(const VarTable& vt, const WeightW& w);

bool is_w_homogeneous(const Poly& p, const std::vector<long>& var_w);

}  // namespace grst
