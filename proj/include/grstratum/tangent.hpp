#pragma once

#include "grstratum/scheme.hpp"

namespace grst {

using QRow = std::vector<mpq_class>;
using QMatrix = std::vector<QRow>;

/// Linear-relation matrix, one row per generator of A (rows may be zero).
QMatrix tangent_matrix(const SchemeIdeal& si);

/// The same rows assembled independently from the b-recursion
/// b_{xi,beta} = b_{xi-nu(xi),beta-nu(xi)}, aligned 1:1 with si.gens.
QMatrix tangent_matrix_resolved(const SchemeIdeal& si);

/// Distinct nonzero rows of a matrix (for reporting).
QMatrix distinct_rows(const QMatrix& m);

struct RrefResult {
    QMatrix rref;            // reduced rows; rows [0,rank) are the pivot rows
    QMatrix transform;       // P with rref = P * input
    std::vector<int> pivots; // pivot column per pivot row
    int rank = 0;
};

/// Reduced row echelon form over Q.  Columns are scanned in the given order;
/// the first matching row becomes the pivot row.
RrefResult row_reduce(QMatrix rows, const std::vector<int>& col_order);

struct TangentReport {
    int num_vars = 0;
    int rank = 0;
    int embedding_dim = 0;
    std::vector<int> eliminable;  // pivot variables T', canonical indices
    RrefResult rr;
    QMatrix kernel;  // basis of the tangent space, one array per basis vector
};

/// Tangent space at the monomial point: kernel of the relation matrix.
/// Pivots eliminate the smallest variable of each relation.
TangentReport tangent_report(const SchemeIdeal& si);

struct EmbeddedPresentation {
    std::vector<int> residual_vars;       // canonical order (descending)
    std::map<int, Poly> substitutions;    // t' -> -g_{t'}, closed over T'
    std::vector<Poly> residual_gens;      // no constant, no linear terms
    bool flat = false;                    // residual ideal is zero
    std::vector<std::string> names;       // per variable: alias letter or T-name
};

/// Applies the row recombination to the generators, exposes {t' + g_{t'}},
/// substitutes the eliminable variables away and returns the presentation in
/// the embedding dimension.
EmbeddedPresentation eliminate(const SchemeIdeal& si, const TangentReport& tr);

}  // namespace grst
