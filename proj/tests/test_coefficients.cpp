#include "doctest.h"

#include "ahecke/error.hpp"
#include "ahecke/laurent.hpp"
#include "ahecke/matrix.hpp"

using namespace ahecke;

TEST_CASE("laurent ring arithmetic") {
    LaurentPoly v = LaurentPoly::v(0), q = LaurentPoly::q(0), one = 1;
    CHECK(v * v == q);
    CHECK((q - one) * (q + one) == LaurentPoly::q(0, 2) - one);
    CHECK(v.inverse() * v == one);
    CHECK((v + LaurentPoly::v(1)) - LaurentPoly::v(1) == v);
    CHECK((q - q).is_zero());
    CHECK_THROWS_AS((q - one).inverse(), Error);
    CHECK_THROWS_AS(LaurentPoly().inverse(), Error);
}

TEST_CASE("specialization respects arithmetic") {
    auto sp = Specialization::from_q({Rational(4), Rational(9)});
    CHECK(sp.v(0) == 2);
    CHECK(sp.v(1) == 3);
    LaurentPoly a = LaurentPoly::q(0) - 1, b = LaurentPoly::v(1, -1) + LaurentPoly::v(0);
    CHECK(sp.eval(a * b) == sp.eval(a) * sp.eval(b));
    CHECK(sp.eval(a + b) == sp.eval(a) + sp.eval(b));
    CHECK(sp.eval(b) == Rational(7, 3));
}

TEST_CASE("illegal specializations") {
    CHECK_THROWS_AS(Specialization::from_q({Rational(1)}), Error);
    CHECK_THROWS_AS(Specialization::from_q({Rational(0)}), Error);
    CHECK_THROWS_AS(Specialization::from_q({Rational(2)}), Error);
    CHECK_NOTHROW(Specialization::from_q({Rational(9, 4)}));
}

TEST_CASE("matrix kernel, inverse and invariant-subspace trace") {
    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK(m * m.inverse() == Matrix::identity(2));
    CHECK(m.determinant() == -2);
    Matrix s(2, 3);
    s(0, 0) = 1;
    s(0, 1) = 1;
    s(1, 2) = 1;
    CHECK(s.kernel().cols() == 1);
    CHECK((s * s.kernel()).is_zero());
    Matrix swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1;
    Matrix diag(2, 1);
    diag(0, 0) = diag(1, 0) = 1;
    CHECK(trace_on_subspace(swap, diag) == 1);
    Matrix anti(2, 1);
    anti(0, 0) = 1;
    anti(1, 0) = -1;
    CHECK(trace_on_subspace(swap, anti) == -1);
}
