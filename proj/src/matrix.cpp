#include "clif/matrix.hpp"

#include <stdexcept>

namespace clif {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = GaussRational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_real() const {
    for (const auto& x : data_)
        if (!x.is_real()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
    return m;
}

Matrix Matrix::real_part() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = GaussRational(data_[k].re);
    return m;
}

Matrix Matrix::imag_part() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = GaussRational(data_[k].im);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const GaussRational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const GaussRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<GaussRational> Matrix::apply(const std::vector<GaussRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<GaussRational> out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<GaussRational> Matrix::col(size_t j) const {
    std::vector<GaussRational> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<GaussRational> Matrix::row(size_t i) const {
    std::vector<GaussRational> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void Matrix::set_col(size_t j, const std::vector<GaussRational>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::from_cols(const std::vector<std::vector<GaussRational>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussRational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

namespace {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        GaussRational inv = inverse(m(r, c));
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GaussRational f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

std::vector<std::vector<GaussRational>> kernel_basis(const Matrix& m) {
    Matrix w = m;
    std::vector<size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<GaussRational>> basis;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<GaussRational> v(m.cols());
        v[c] = GaussRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GaussRational>> solve(const Matrix& m,
                                                const std::vector<GaussRational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("matrix/vector size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<GaussRational> x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = GaussRational(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

GaussRational trace(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    GaussRational t;
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Matrix realified_rows(const Matrix& m) {
    Matrix out(2 * m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = GaussRational(m(i, j).re);
            out(m.rows() + i, j) = GaussRational(m(i, j).im);
        }
    return out;
}

Matrix submatrix(const Matrix& m, size_t r0, size_t c0, size_t nr, size_t nc) {
    if (r0 + nr > m.rows() || c0 + nc > m.cols())
        throw std::invalid_argument("submatrix out of range");
    Matrix out(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}

Matrix assemble2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    size_t nr = a.rows(), nc = a.cols();
    if (b.rows() != nr || c.cols() != nc || d.rows() != c.rows() || d.cols() != b.cols() ||
        b.cols() != d.cols() || c.rows() != d.rows())
        throw std::invalid_argument("assemble2x2 block size mismatch");
    Matrix out(nr + c.rows(), nc + b.cols());
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) out(i, j) = a(i, j);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < b.cols(); ++j) out(i, nc + j) = b(i, j);
    for (size_t i = 0; i < c.rows(); ++i)
        for (size_t j = 0; j < nc; ++j) out(nr + i, j) = c(i, j);
    for (size_t i = 0; i < c.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) out(nr + i, nc + j) = d(i, j);
    return out;
}

}  // namespace clif
