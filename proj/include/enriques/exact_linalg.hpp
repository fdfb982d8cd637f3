#pragma once
#include <optional>

#include "enriques/int_matrix.hpp"

namespace enriques {

struct HnfResult {
    IntMatrix H;  // row-style Hermite form of M
    IntMatrix U;  // unimodular, U * M == H
};

struct SnfResult {
    IntMatrix D;  // diagonal, d1 | d2 | ..., non-negative, zeros trailing
    IntMatrix U;  // unimodular
    IntMatrix V;  // unimodular, U * M * V == D
};

/// Row-style Hermite normal form: row echelon, pivots positive, entries
/// above each pivot reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& M);

SnfResult smith_normal_form(const IntMatrix& M);

/// Basis (as columns) of {x : M x = 0}. The result spans a saturated
/// subgroup of Z^cols(M); a 0 x n matrix has kernel all of Z^n.
IntMatrix kernel_basis(const IntMatrix& M);

/// Some integer solution of M x = b, or nullopt when none exists.
std::optional<IntVec> solve(const IntMatrix& M, const IntVec& b);

/// Invariants of Z^rows(M) / column-span(M).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& M);

/// Invariants of span(A) / span(B), columns of A independent and every
/// column of B inside the integer span of A's columns.
AbelianGroupInvariants subquotient_invariants(const IntMatrix& A, const IntMatrix& B);

/// Exact determinant of a square matrix (fraction-free elimination).
Int det(const IntMatrix& M);

/// Independent columns forming a basis of the column span (canonical,
/// read off the Hermite form of the transpose).
IntMatrix column_span_basis(const IntMatrix& M);

/// Canonical coset representative of x modulo the lattice spanned by the
/// columns of B: reduces pivot coordinates against the row Hermite form
/// of B^T. Constant on cosets.
IntVec reduce_mod_lattice(const IntVec& x, const IntMatrix& B);

}  // namespace enriques
