#pragma once

#include <string>
#include <vector>

#include "grstratum/errors.hpp"

namespace grst {

/// A point of N^n; doubles as the exponent of a monomial x^alpha.
using Exponent = std::vector<int>;

int degree(const Exponent& a);
Exponent add(const Exponent& a, const Exponent& b);
/// Componentwise a - b; returns false if any coordinate would go negative.
bool sub(const Exponent& a, const Exponent& b, Exponent& out);
/// True iff b - a is componentwise non-negative (x^a divides x^b).
bool divides(const Exponent& a, const Exponent& b);
Exponent unit(int n, int i);
std::string to_string(const Exponent& a);

enum class OrderKind { lex, grlex, grevlex, matrix };

/// A monomial order on N^n: lex / grlex / grevlex with a variable priority
/// permutation, or an explicit integer weight matrix.
class MonomialOrder {
public:
    static MonomialOrder lex(int n, std::vector<int> priority = {});
    static MonomialOrder grlex(int n, std::vector<int> priority = {});
    static MonomialOrder grevlex(int n, std::vector<int> priority = {});
    static MonomialOrder matrix(int n, std::vector<std::vector<long>> rows);

    /// -1, 0 or +1.  Throws OrderTieError if a matrix order cannot separate
    /// two distinct exponents.
    int compare(const Exponent& a, const Exponent& b) const;

    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

    /// True iff |a| > |b| implies a > b.
    bool is_graded() const;

    int dim() const { return n_; }
    OrderKind kind() const { return kind_; }
    const std::vector<int>& priority() const { return priority_; }

    /// The defining weight rows (for lex/grlex/grevlex, the standard matrix
    /// form; for matrix orders, the given rows).
    const std::vector<std::vector<long>>& weight_rows() const { return rows_; }

    std::string kind_name() const;

private:
    MonomialOrder(OrderKind kind, int n, std::vector<int> priority,
                  std::vector<std::vector<long>> rows);

    OrderKind kind_;
    int n_;
    std::vector<int> priority_;
    std::vector<std::vector<long>> rows_;
};

}  // namespace grst
