#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "enriques/errors.hpp"

namespace enriques {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
/// Empty shapes (0 rows or 0 cols) are legal everywhere.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw InputError("ragged row list");
            std::size_t j = 0;
            for (long x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
        IntMatrix s(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = data_[k] + o.data_[k];
        return s;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError("matrix difference shape mismatch");
        IntMatrix s(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = data_[k] - o.data_[k];
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix s(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] = -data_[k];
        return s;
    }

    IntVec apply(const IntVec& x) const {
        if (x.size() != cols_) throw InputError("matrix-vector shape mismatch");
        IntVec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    IntVec column(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    /// Matrix whose columns are the given vectors (all of length dim).
    static IntMatrix from_columns(std::size_t dim, const std::vector<IntVec>& cols) {
        IntMatrix m(dim, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != dim) throw InputError("column length mismatch");
            for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
        return m;
    }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix pow(unsigned long e) const {
        IntMatrix r = identity(rows_);
        for (unsigned long k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    // col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
    }

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Finitely generated abelian group in canonical form: free rank plus an
/// invariant-factor chain d1 | d2 | ... with every di >= 2.
struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    Int torsion_order() const {
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }

    bool operator==(const AbelianGroupInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianGroupInvariants& o) const { return !(*this == o); }

    std::string str() const;
};

}  // namespace enriques
