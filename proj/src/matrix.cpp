#include "ahecke/matrix.hpp"

#include "ahecke/error.hpp"

#include <sstream>

namespace ahecke {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) fail(ErrorKind::AssumptionViolated, "matrix shape mismatch in product");
    Matrix out(r_, o.c_);
    Rational t;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const Rational& y = o(k, j);
                if (sgn(y) == 0) continue;
                t = x * y;
                out(i, j) += t;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    out += o;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::AssumptionViolated, "matrix shape mismatch in sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

Matrix Matrix::operator*(const Rational& c) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Rational Matrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Rational Matrix::determinant() const {
    if (r_ != c_) fail(ErrorKind::AssumptionViolated, "determinant of a non-square matrix");
    Matrix m = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < r_; ++col) {
        std::size_t p = col;
        while (p < r_ && sgn(m(p, col)) == 0) ++p;
        if (p == r_) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < r_; ++i) {
            if (sgn(m(i, col)) == 0) continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (r_ != c_) fail(ErrorKind::AssumptionViolated, "inverse of a non-square matrix");
    Matrix aug = hconcat(identity(r_));
    auto piv = rref(aug);
    if (piv.size() < r_ || piv[r_ - 1] != r_ - 1)
        fail(ErrorKind::NonInvertibleCoefficient, "singular matrix");
    Matrix out(r_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) out(i, j) = aug(i, r_ + j);
    return out;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return rref(m).size();
}

Matrix Matrix::kernel() const {
    Matrix m = *this;
    auto piv = rref(m);
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < c_; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(c_);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return from_columns(basis, c_);
}

Matrix Matrix::column_basis() const {
    Matrix m = *this;
    auto piv = rref(m);
    Matrix out(r_, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < r_; ++i) out(i, k) = (*this)(i, piv[k]);
    return out;
}

bool Matrix::solve(const Matrix& b, Matrix& x) const {
    Matrix aug = hconcat(b);
    auto piv = rref(aug);
    for (auto p : piv)
        if (p >= c_) return false;
    x = Matrix(c_, b.cols());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[k], j) = aug(k, c_ + j);
    return true;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix out(r_, 1);
    for (std::size_t i = 0; i < r_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (r_ != o.r_) fail(ErrorKind::AssumptionViolated, "row mismatch in hconcat");
    Matrix out(r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.c_; ++j) out(i, c_ + j) = o(i, j);
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Rational trace_on_subspace(const Matrix& g, const Matrix& basis) {
    if (basis.cols() == 0) return 0;
    Matrix coords;
    if (!basis.solve(g * basis, coords))
        fail(ErrorKind::AssumptionViolated, "subspace is not invariant");
    return coords.trace();
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
    Matrix k = a.hconcat(-b).kernel();
    Matrix top(a.cols(), k.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
    Matrix span = a * top;
    if (span.cols() == 0) return span;
    return span.column_basis();
}

}  // namespace ahecke
