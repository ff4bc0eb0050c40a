#include "porder/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace porder {

IntMat IntMat::identity(long n) {
    IntMat I(n, n);
    for (long i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

namespace {

void col_swap(IntMat& A, long i, long j) {
    for (long r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
}

// col_j += k * col_i
void col_addmul(IntMat& A, long j, long i, const Int& k) {
    if (k == 0) return;
    for (long r = 0; r < A.rows; ++r) A.at(r, j) += k * A.at(r, i);
}

void col_neg(IntMat& A, long j) {
    for (long r = 0; r < A.rows; ++r) A.at(r, j) = -A.at(r, j);
}

}  // namespace

void hnf_columns(IntMat& A, IntMat* transform) {
    IntMat U = IntMat::identity(A.cols);
    long pr = 0, pc = 0;
    while (pr < A.rows && pc < A.cols) {
        // Euclid the row entries right of pc into column pc.
        for (;;) {
            long piv = -1;
            for (long c = pc; c < A.cols; ++c) {
                if (A.at(pr, c) != 0 && (piv < 0 || abs(A.at(pr, c)) < abs(A.at(pr, piv)))) piv = c;
            }
            if (piv < 0) break;
            if (piv != pc) {
                col_swap(A, pc, piv);
                col_swap(U, pc, piv);
            }
            bool done = true;
            for (long c = pc + 1; c < A.cols; ++c) {
                if (A.at(pr, c) == 0) continue;
                Int q = A.at(pr, c) / A.at(pr, pc);  // truncated division is fine for Euclid
                col_addmul(A, c, pc, -q);
                col_addmul(U, c, pc, -q);
                if (A.at(pr, c) != 0) done = false;
            }
            if (done) break;
        }
        if (A.at(pr, pc) == 0) {
            ++pr;  // no pivot in this row
            continue;
        }
        if (A.at(pr, pc) < 0) {
            col_neg(A, pc);
            col_neg(U, pc);
        }
        // Reduce columns left of the pivot into [0, pivot).
        for (long c = 0; c < pc; ++c) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A.at(pr, c).get_mpz_t(), A.at(pr, pc).get_mpz_t());
            col_addmul(A, c, pc, -q);
            col_addmul(U, c, pc, -q);
        }
        ++pr;
        ++pc;
    }
    if (transform) *transform = std::move(U);
}

IntMat kernel_columns(const IntMat& A) {
    IntMat H = A;
    IntMat U;
    hnf_columns(H, &U);
    // Kernel = columns of U where H's column vanished.
    std::vector<long> zs;
    for (long c = 0; c < H.cols; ++c) {
        bool zero = true;
        for (long r = 0; r < H.rows; ++r)
            if (H.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (zero) zs.push_back(c);
    }
    IntMat K(A.cols, static_cast<long>(zs.size()));
    for (size_t j = 0; j < zs.size(); ++j)
        for (long r = 0; r < A.cols; ++r) K.at(r, static_cast<long>(j)) = U.at(r, zs[j]);
    return K;
}

SmithResult smith_normal_form(const IntMat& A0) {
    IntMat A = A0;
    IntMat Vinv = IntMat::identity(A.cols);
    IntMat U = IntMat::identity(A.rows);

    auto row_swap = [&](IntMat& M, long i, long j) {
        for (long c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
    };
    auto row_addmul = [&](IntMat& M, long j, long i, const Int& k) {
        if (k == 0) return;
        for (long c = 0; c < M.cols; ++c) M.at(j, c) += k * M.at(i, c);
    };

    long n = std::min(A.rows, A.cols);
    long t = 0;
    while (t < n) {
        // Find the smallest nonzero entry in the trailing block.
        long br = -1, bc = -1;
        for (long r = t; r < A.rows; ++r)
            for (long c = t; c < A.cols; ++c)
                if (A.at(r, c) != 0 && (br < 0 || abs(A.at(r, c)) < abs(A.at(br, bc)))) {
                    br = r;
                    bc = c;
                }
        if (br < 0) break;
        if (br != t) {
            row_swap(A, br, t);
            row_swap(U, br, t);
        }
        if (bc != t) {
            col_swap(A, bc, t);
            col_swap(Vinv, bc, t);
        }
        bool clean = true;
        for (long r = t + 1; r < A.rows; ++r) {
            if (A.at(r, t) == 0) continue;
            Int q = A.at(r, t) / A.at(t, t);
            row_addmul(A, r, t, -q);
            row_addmul(U, r, t, -q);
            if (A.at(r, t) != 0) clean = false;
        }
        for (long c = t + 1; c < A.cols; ++c) {
            if (A.at(t, c) == 0) continue;
            Int q = A.at(t, c) / A.at(t, t);
            col_addmul(A, c, t, -q);
            col_addmul(Vinv, c, t, -q);
            if (A.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // re-run elimination at the same pivot
        if (A.at(t, t) < 0) {
            col_neg(A, t);
            col_neg(Vinv, t);
        }
        ++t;
    }
    // Divisibility chain is not needed by our callers (preimage lattices
    // only require diagonal form), so stop at diagonal.
    SmithResult res;
    res.diag.resize(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) res.diag[static_cast<size_t>(i)] = A.at(i, i);
    res.Vinv = std::move(Vinv);
    res.U = std::move(U);
    return res;
}

bool solve_hnf2(const Int& a, const Int& b, const Int& c, const Int& x0, const Int& x1, Int& s, Int& t) {
    // columns (a,0), (b,c): s*a + t*b = x0, t*c = x1
    if (c == 0 || a == 0) throw std::invalid_argument("solve_hnf2: degenerate basis");
    if (!mpz_divisible_p(x1.get_mpz_t(), c.get_mpz_t())) return false;
    t = x1 / c;
    Int rem = x0 - t * b;
    if (!mpz_divisible_p(rem.get_mpz_t(), a.get_mpz_t())) return false;
    s = rem / a;
    return true;
}

}  // namespace porder
