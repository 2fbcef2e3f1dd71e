#pragma once

#include "ahecke/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ahecke {

// Dense matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Rational& c);
    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Rational& c) const;
    Matrix& operator+=(const Matrix& o);
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    Matrix transpose() const;
    Rational trace() const;
    Rational determinant() const;
    bool is_zero() const;

    // Throws NonInvertibleCoefficient when singular.
    Matrix inverse() const;
    std::size_t rank() const;

    // Columns form a basis of the kernel.
    Matrix kernel() const;
    // Columns form a basis of the column space (selected pivot columns).
    Matrix column_basis() const;

    // Solves this * X = B; returns false if inconsistent. Any solution is returned.
    bool solve(const Matrix& b, Matrix& x) const;

    Matrix column(std::size_t j) const;
    Matrix hconcat(const Matrix& o) const;

    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

// Trace of g restricted to the g-invariant subspace spanned by the columns of basis.
// Throws AssumptionViolated if the subspace is not invariant.
Rational trace_on_subspace(const Matrix& g, const Matrix& basis);

// Basis of the intersection of two column spaces.
Matrix intersect_spans(const Matrix& a, const Matrix& b);

}  // namespace ahecke
