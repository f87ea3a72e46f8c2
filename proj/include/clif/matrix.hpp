#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clif/scalar.hpp"

namespace clif {

/// Dense matrix over the Gaussian rationals. Sizes here are tiny (at most
/// 32 x 32), so plain exact Gaussian elimination is used everywhere; every
/// pivot test is an exact comparison with zero.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussRational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const GaussRational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_real() const;

    Matrix transpose() const;
    /// Entrywise complex conjugate.
    Matrix conj() const;
    Matrix real_part() const;
    Matrix imag_part() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const GaussRational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const GaussRational& s) { return a *= s; }
    friend Matrix operator*(const GaussRational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;

    std::vector<GaussRational> col(size_t j) const;
    std::vector<GaussRational> row(size_t i) const;
    void set_col(size_t j, const std::vector<GaussRational>& v);

    static Matrix from_cols(const std::vector<std::vector<GaussRational>>& cols);
    static Matrix from_rows(const std::vector<std::vector<GaussRational>>& rows);

private:
    size_t rows_, cols_;
    std::vector<GaussRational> data_;
};

size_t rank(const Matrix& m);

/// Basis of the right null space { v : m v = 0 }, one vector per free
/// column of the reduced row echelon form. The basis is in the standard
/// RREF form: each vector has a 1 in "its" free column.
std::vector<std::vector<GaussRational>> kernel_basis(const Matrix& m);

/// Solves m x = b exactly; nullopt when the system is inconsistent. If the
/// solution is not unique, one particular solution is returned.
std::optional<std::vector<GaussRational>> solve(const Matrix& m,
                                                const std::vector<GaussRational>& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

GaussRational trace(const Matrix& m);

/// Stacks [Re m; Im m] as a matrix over the rationals (still stored as
/// GaussRational entries with zero imaginary part), used for real-kernel
/// computations.
Matrix realified_rows(const Matrix& m);

/// Rectangular block copy starting at (r0, c0).
Matrix submatrix(const Matrix& m, size_t r0, size_t c0, size_t nr, size_t nc);

/// [[a, b], [c, d]] from four equally sized blocks.
Matrix assemble2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace clif
