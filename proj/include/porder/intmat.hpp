#pragma once

#include <vector>

#include "porder/bigint.hpp"

namespace porder {

/// Dense matrix over Z, row-major; tiny sizes only (lattices, oracles).
struct IntMat {
    long rows = 0, cols = 0;
    std::vector<Int> v;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), v(static_cast<size_t>(r * c)) {}
    Int& at(long r, long c) { return v[static_cast<size_t>(r * cols + c)]; }
    const Int& at(long r, long c) const { return v[static_cast<size_t>(r * cols + c)]; }

    static IntMat identity(long n);
};

/**
 * Column-style Hermite normal form.  Columns of A are replaced by an
 * echelon basis of the same column lattice: pivots march down-right,
 * pivot entries positive, entries left of a pivot reduced into [0, pivot).
 * Zero columns are moved to the end.  If `transform` is non-null it
 * receives a unimodular U with A_in * U = A_out.
 */
void hnf_columns(IntMat& A, IntMat* transform = nullptr);

/// Basis of the integer kernel {x : A x = 0}, as columns.
IntMat kernel_columns(const IntMat& A);

/**
 * Smith normal form: returns diagonal entries d1 | d2 | ... (nonzero ones
 * first) and, if requested, V_inv with A = U * S * V and columns of V_inv
 * spanning the preimage directions: A * V_inv = U * S.
 */
struct SmithResult {
    std::vector<Int> diag;  // length min(rows, cols); zeros at the end
    IntMat Vinv;            // cols x cols, A * Vinv has columns d_j * u_j
    IntMat U;               // rows x rows unimodular
};
SmithResult smith_normal_form(const IntMat& A);

/// Solve A x = b for integer x when A's columns are an upper-triangular
/// 2x2 HNF basis; returns false if no integral solution.
bool solve_hnf2(const Int& a, const Int& b, const Int& c, const Int& x0, const Int& x1, Int& s, Int& t);

}  // namespace porder
