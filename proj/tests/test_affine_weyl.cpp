#include "doctest.h"

#include "ahecke/affine_weyl.hpp"
#include "ahecke/error.hpp"

using namespace ahecke;

namespace {

std::shared_ptr<const AffineWeylGroup> affine(CartanType t, int n, LatticeKind k) {
    return std::make_shared<AffineWeylGroup>(WeylGroup::create(std::make_shared<RootDatum>(t, n, k)));
}

struct Case {
    CartanType t;
    int n;
    LatticeKind k;
};

const Case kCases[] = {{CartanType::A, 1, LatticeKind::Root}, {CartanType::A, 1, LatticeKind::Weight},
                       {CartanType::A, 2, LatticeKind::Root}, {CartanType::A, 2, LatticeKind::Weight},
                       {CartanType::B, 2, LatticeKind::Root}, {CartanType::B, 2, LatticeKind::Weight},
                       {CartanType::G, 2, LatticeKind::Root}, {CartanType::C, 3, LatticeKind::Weight}};

}  // namespace

TEST_CASE("generators have length one and the length is a Coxeter length") {
    for (const auto& c : kCases) {
        auto aff = affine(c.t, c.n, c.k);
        for (int s = 0; s < aff->num_generators(); ++s) {
            CHECK(aff->length(aff->generator(s)) == 1);
            CHECK(aff->mul(aff->generator(s), aff->generator(s)) == aff->identity());
        }
        for (const auto& w : aff->ball(4)) {
            CHECK(aff->length(aff->inverse(w)) == aff->length(w));
            for (int s = 0; s < aff->num_generators(); ++s)
                CHECK(std::abs(aff->length(aff->mul(w, aff->generator(s))) - aff->length(w)) == 1);
            auto d = aff->decompose(w);
            CHECK(static_cast<int>(d.word.size()) == aff->length(w));
            CHECK(aff->mul(d.gamma, aff->from_word(d.word)) == w);
        }
    }
}

TEST_CASE("length-zero elements") {
    CHECK(affine(CartanType::A, 1, LatticeKind::Root)->omega().size() == 1);
    CHECK(affine(CartanType::A, 1, LatticeKind::Weight)->omega().size() == 2);
    CHECK(affine(CartanType::A, 2, LatticeKind::Weight)->omega().size() == 3);
    CHECK(affine(CartanType::B, 2, LatticeKind::Weight)->omega().size() == 2);
    auto aff = affine(CartanType::A, 2, LatticeKind::Weight);
    for (const auto& g : aff->omega()) {
        CHECK(aff->length(g) == 0);
        for (int s = 0; s < aff->num_generators(); ++s)
            CHECK(aff->length(aff->generator(aff->conjugate_generator(g, s))) == 1);
    }
}

TEST_CASE("ball sizes of the infinite dihedral group and of type A2 tilde") {
    CHECK(affine(CartanType::A, 1, LatticeKind::Root)->ball(6).size() == 13);
    CHECK(affine(CartanType::A, 2, LatticeKind::Root)->ball(6).size() == 64);
}

TEST_CASE("translation by alpha0 factors through s0") {
    for (const auto& c : kCases) {
        auto aff = affine(c.t, c.n, c.k);
        const RootDatum& rd = aff->datum();
        auto t = aff->translation(rd.root(rd.alpha0()).x);
        auto sa = aff->from_finite(aff->finite().reflection(rd.alpha0()));
        CHECK(aff->mul(aff->generator(aff->s0_index()), sa) == t);
        CHECK(aff->length(t) == 1 + aff->length(sa));
    }
}

TEST_CASE("Coxeter orders") {
    auto a1 = affine(CartanType::A, 1, LatticeKind::Root);
    CHECK(a1->coxeter_m(0, 1) == 0);
    auto a2 = affine(CartanType::A, 2, LatticeKind::Root);
    CHECK(a2->coxeter_m(0, 1) == 3);
    CHECK(a2->coxeter_m(2, 1) == 3);
    auto b2 = affine(CartanType::B, 2, LatticeKind::Root);
    // s0 links to the long simple root only
    CHECK(b2->coxeter_m(0, 1) == 4);
    CHECK(b2->coxeter_m(2, 0) == 4);
    CHECK(b2->coxeter_m(2, 1) == 2);
}

TEST_CASE("alcove side test") {
    for (const auto& c : kCases) {
        auto aff = affine(c.t, c.n, c.k);
        const WeylGroup& w = aff->finite();
        for (int s = 0; s < aff->rank(); ++s) CHECK_FALSE(aff->in_L_set(s, aff->identity()));
        CHECK(aff->in_L_set(aff->s0_index(), aff->identity()));
        for (int v = 0; v < w.order(); ++v)
            for (int s = 0; s < aff->rank(); ++s)
                CHECK(aff->in_L_set(s, aff->from_finite(v)) == (w.length(w.mul(w.simple_reflection(s), v)) < w.length(v)));
    }
}

TEST_CASE("barycenter of A^- lies strictly inside") {
    auto aff = affine(CartanType::B, 2, LatticeKind::Root);
    const RootDatum& rd = aff->datum();
    auto b = aff->barycenter();
    for (int r : rd.positive_roots()) {
        Rational p = 0;
        for (int i = 0; i < rd.rank(); ++i) p += b[i] * rd.root(r).coroot[i];
        CHECK(p < 0);
        CHECK(p > -1);
    }
}

TEST_CASE("parameter symbols") {
    auto count = [](CartanType t, int n, LatticeKind k, ParamAssignment p) {
        auto aff = affine(t, n, k);
        return affine_parameters(*aff, p).num_symbols;
    };
    auto eq = [](CartanType t, int n, LatticeKind k) {
        return ParamAssignment::equal(RootDatum(t, n, k));
    };
    CHECK(count(CartanType::A, 1, LatticeKind::Root, eq(CartanType::A, 1, LatticeKind::Root)) == 1);
    CHECK(count(CartanType::A, 1, LatticeKind::Weight, eq(CartanType::A, 1, LatticeKind::Weight)) == 1);
    CHECK(count(CartanType::A, 2, LatticeKind::Root, eq(CartanType::A, 2, LatticeKind::Root)) == 1);
    CHECK(count(CartanType::B, 2, LatticeKind::Root, eq(CartanType::B, 2, LatticeKind::Root)) == 2);
    CHECK(count(CartanType::G, 2, LatticeKind::Root, eq(CartanType::G, 2, LatticeKind::Root)) == 2);
    CHECK(count(CartanType::A, 1, LatticeKind::Root, ParamAssignment{{1}, {2}}) == 2);
    CHECK_THROWS_AS(count(CartanType::A, 1, LatticeKind::Weight, ParamAssignment{{1}, {2}}), Error);
    // s0 and s1 are swapped by the nontrivial length-zero element
    auto aff = affine(CartanType::A, 1, LatticeKind::Weight);
    CHECK(aff->conjugate_generator(aff->omega()[1], 0) == 1);
}
