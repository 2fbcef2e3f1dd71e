#pragma once

#include "ahecke/matrix.hpp"
#include "ahecke/report.hpp"
#include "ahecke/weyl.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ahecke {

// The coset x W_I, x minimal; a simplex of degree |S \ I| - 1 with vertices x W_{S \ {s}}, s not in I.
struct Simplex {
    SimpleSet I;
    int rep = 0;
    auto operator<=>(const Simplex&) const = default;
};

class CoxeterComplex {
public:
    // All x W_I with I a proper subset of S.
    static CoxeterComplex full(std::shared_ptr<const WeylGroup> w);
    // Cosets x W_I with x^{-1} in C_{I0}(I); a sphere of dimension n - |I0| - 1. Throws EmptySphere for I0 = S.
    static CoxeterComplex sub(std::shared_ptr<const WeylGroup> w, const SimpleSet& I0);

    const WeylGroup& group() const { return *w_; }
    const SimpleSet& I0() const { return i0_; }
    // W for the full complex, N_W(W_{I0}) otherwise.
    std::shared_ptr<const Subgroup> acting_group() const { return acting_; }
    int top() const { return static_cast<int>(cells_.size()) - 1; }
    // Dimension of the sphere: n - |I0| - 1.
    int sphere_dimension() const { return w_->rank() - static_cast<int>(i0_.size()) - 1; }
    std::size_t size() const;

    const std::vector<Simplex>& simplices(int r) const { return cells_[r]; }
    int index_of(const Simplex& s) const;  // position in its degree, or -1
    // S \ I in increasing order.
    SimpleSet vertex_types(const Simplex& s) const;
    // Drop the i-th vertex: x W_{I u {t_i}}.
    Simplex face(const Simplex& s, int i) const;
    // g x W_I.
    Simplex act(int g, const Simplex& s) const;
    int coset_rep(int x, const SimpleSet& I) const;

private:
    CoxeterComplex(std::shared_ptr<const WeylGroup> w, SimpleSet I0);

    std::shared_ptr<const WeylGroup> w_;
    SimpleSet i0_;
    std::shared_ptr<const Subgroup> acting_;
    std::map<SimpleSet, std::vector<int>> rep_;  // rep_[I][x] = minimal element of x W_I
    std::vector<std::vector<Simplex>> cells_;
    std::map<Simplex, int> index_;
};

// Rational chains with the boundary sum_i (-1)^i face_i and the action by left translation.
class ChainComplexQ {
public:
    explicit ChainComplexQ(const CoxeterComplex& cx);

    const CoxeterComplex& complex() const { return *cx_; }
    int top() const { return cx_->top(); }
    std::size_t dim(int r) const { return cx_->simplices(r).size(); }
    // d_r : C_r -> C_{r-1}, r >= 1.
    const Matrix& boundary(int r) const { return d_[r]; }
    // Permutation matrix of g on C_r; the action preserves vertex types, hence orientations.
    Matrix action(int g, int r) const;

    std::vector<std::size_t> betti() const;
    Rational homology_trace(int g, int r) const;
    // One class function per degree on the acting group.
    std::vector<ClassFunction> homology_characters() const;

    Rational chain_lefschetz(int g) const;
    Rational homology_lefschetz(int g) const;
    // Euler characteristic of the subcomplex of g-fixed simplices, from its Betti numbers.
    Rational fixed_euler(int g) const;

private:
    const CoxeterComplex* cx_;
    std::vector<Matrix> d_;
    std::vector<Matrix> cycles_, bounds_;  // column bases of Z_r and B_r
};

// 1 + (-1)^{n - |I0| - 1} det(g on I0 perp).
int expected_lefschetz(const CoxeterComplex& cx, int g);

// Number of simplices x W_I of the complex fixed by h.
int fixed_coset_count(const CoxeterComplex& cx, int h, const SimpleSet& I);
// sum over W_I \ C_{I0}(I) / H of Ind_{H cap W_I^w}^H 1 at h, H the acting group.
Rational induced_coset_count(const CoxeterComplex& cx, int h, const SimpleSet& I);

// d^2 = 0, equivariance, homology characters, Betti numbers, the three Lefschetz values against
// the closed formula, and the coset counts. With corrupt set the det factor of the formula is negated.
std::vector<CheckRecord> complex_checks(const CoxeterComplex& cx, bool corrupt = false);

}  // namespace ahecke
