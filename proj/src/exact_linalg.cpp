#include "enriques/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace enriques {

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string AbelianGroupInvariants::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) os << (first ? "" : " + ") << "Z^" << free_rank;
    return os.str();
}

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    HnfResult res{M, IntMatrix::identity(r)};
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    std::size_t row = 0;
    for (std::size_t j = 0; j < c && row < r; ++j) {
        // Euclidean reduction of column j among rows >= row.
        while (true) {
            std::size_t p = r;
            for (std::size_t i = row; i < r; ++i)
                if (H(i, j) != 0 && (p == r || abs_less(H(i, j), H(p, j)))) p = i;
            if (p == r) break;
            if (p != row) {
                H.swap_rows(p, row);
                U.swap_rows(p, row);
            }
            bool clean = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (H(i, j) == 0) continue;
                Int q = fdiv(H(i, j), H(row, j));
                H.add_row(i, row, -q);
                U.add_row(i, row, -q);
                if (H(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H(row, j) != 0) {
            if (H(row, j) < 0) {
                H.negate_row(row);
                U.negate_row(row);
            }
            for (std::size_t i = 0; i < row; ++i) {
                Int q = fdiv(H(i, j), H(row, j));
                if (q != 0) {
                    H.add_row(i, row, -q);
                    U.add_row(i, row, -q);
                }
            }
            ++row;
        }
    }
    return res;
}

SnfResult smith_normal_form(const IntMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    SnfResult res{M, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const std::size_t k = std::min(r, c);

    auto is_diagonal = [&]() {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && D(i, j) != 0) return false;
        return true;
    };
    while (true) {
        // Alternate row and column Hermite reduction. A full round either
        // leaves the matrix diagonal or strictly decreases a pivot, and the
        // intermediate entries stay at Hermite scale (no elimination swell).
        while (!is_diagonal()) {
            HnfResult rows = hermite_normal_form(D);
            D = std::move(rows.H);
            U = rows.U * U;
            HnfResult cols = hermite_normal_form(D.transpose());
            D = cols.H.transpose();
            V = V * cols.U.transpose();
        }
        for (std::size_t i = 0; i < k; ++i)
            if (D(i, i) < 0) {
                D.negate_row(i);
                U.negate_row(i);
            }
        // Enforce the divisibility chain pairwise; each fix folds d_{i+1}
        // into column i and re-diagonalizes, replacing d_i by the gcd.
        bool done = true;
        for (std::size_t i = 0; i + 1 < k && done; ++i) {
            if (D(i, i) == 0 && D(i + 1, i + 1) != 0) {
                D.swap_rows(i, i + 1);
                U.swap_rows(i, i + 1);
                D.swap_cols(i, i + 1);
                V.swap_cols(i, i + 1);
                done = false;
            } else if (D(i, i) != 0 && D(i + 1, i + 1) % D(i, i) != 0) {
                D.add_col(i, i + 1, 1);
                V.add_col(i, i + 1, 1);
                done = false;
            }
        }
        if (done) break;
    }
    return res;
}

IntMatrix kernel_basis(const IntMatrix& M) {
    HnfResult h = hermite_normal_form(M.transpose());
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols() && zero; ++j)
            if (h.H(i, j) != 0) zero = false;
        if (!zero) continue;
        IntVec v(h.U.cols());
        for (std::size_t j = 0; j < h.U.cols(); ++j) v[j] = h.U(i, j);
        cols.push_back(std::move(v));
    }
    return IntMatrix::from_columns(M.cols(), cols);
}

std::optional<IntVec> solve(const IntMatrix& M, const IntVec& b) {
    if (b.size() != M.rows()) throw InputError("solve: right-hand side length mismatch");
    SnfResult s = smith_normal_form(M);
    IntVec ub = s.U.apply(b);
    IntVec y(M.cols());
    const std::size_t k = std::min(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        const Int d = i < k ? s.D(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return s.V.apply(y);
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& M) {
    SnfResult s = smith_normal_form(M);
    AbelianGroupInvariants g;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) {
        if (s.D(i, i) == 0) break;
        ++nonzero;
        if (s.D(i, i) >= 2) g.torsion.push_back(s.D(i, i));
    }
    g.free_rank = M.rows() - nonzero;
    return g;
}

AbelianGroupInvariants subquotient_invariants(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw InputError("subquotient: ambient dimension mismatch");
    if (kernel_basis(A).cols() != 0)
        throw PreconditionError("subquotient: columns of A are not independent");
    SnfResult s = smith_normal_form(A);
    IntMatrix X(A.cols(), B.cols());
    const std::size_t k = std::min(A.rows(), A.cols());
    for (std::size_t col = 0; col < B.cols(); ++col) {
        IntVec ub = s.U.apply(B.column(col));
        IntVec y(A.cols());
        for (std::size_t i = 0; i < A.rows(); ++i) {
            const Int d = i < k ? s.D(i, i) : Int(0);
            if (d == 0) {
                if (ub[i] != 0) throw PreconditionError("not a subgroup");
            } else {
                if (ub[i] % d != 0) throw PreconditionError("not a subgroup");
                y[i] = ub[i] / d;
            }
        }
        IntVec x = s.V.apply(y);
        for (std::size_t i = 0; i < A.cols(); ++i) X(i, col) = x[i];
    }
    return cokernel_invariants(X);
}

Int det(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("det: square matrix required");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A(p, k) == 0) ++p;
            if (p == n) return 0;
            A.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A(k, k);
    }
    return sign < 0 ? Int(-A(n - 1, n - 1)) : A(n - 1, n - 1);
}

IntMatrix column_span_basis(const IntMatrix& M) {
    HnfResult h = hermite_normal_form(M.transpose());
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < h.H.rows(); ++i) {
        IntVec v(h.H.cols());
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols(); ++j) {
            v[j] = h.H(i, j);
            if (v[j] != 0) zero = false;
        }
        if (!zero) cols.push_back(std::move(v));
    }
    return IntMatrix::from_columns(M.rows(), cols);
}

IntVec reduce_mod_lattice(const IntVec& x, const IntMatrix& B) {
    if (x.size() != B.rows()) throw InputError("reduce_mod_lattice: dimension mismatch");
    IntMatrix H = hermite_normal_form(B.transpose()).H;
    IntVec v = x;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t piv = H.cols();
        for (std::size_t j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv == H.cols()) break;
        Int q = fdiv(v[piv], H(i, piv));
        if (q != 0)
            for (std::size_t j = 0; j < H.cols(); ++j) v[j] -= q * H(i, j);
    }
    return v;
}

}  // namespace enriques
