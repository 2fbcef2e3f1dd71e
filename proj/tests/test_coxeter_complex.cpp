#include "doctest.h"

#include "ahecke/coxeter_complex.hpp"
#include "ahecke/error.hpp"

using namespace ahecke;

namespace {

std::shared_ptr<const WeylGroup> weyl(CartanType t, int n) {
    return WeylGroup::create(std::make_shared<RootDatum>(t, n, LatticeKind::Root));
}

bool all_pass(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}

}  // namespace

TEST_CASE("the A2 complex is a hexagon") {
    auto w = weyl(CartanType::A, 2);
    auto cx = CoxeterComplex::full(w);
    ChainComplexQ cc(cx);
    CHECK(cc.dim(0) == 6);
    CHECK(cc.dim(1) == 6);
    CHECK(cc.boundary(1).rank() == 5);
    CHECK(cc.betti() == std::vector<std::size_t>{1, 1});
    auto chars = cc.homology_characters();
    auto whole = cx.acting_group();
    for (std::size_t k = 0; k < whole->classes().size(); ++k) {
        int g = whole->classes()[k][0];
        CHECK(chars[0].values()[k] == 1);
        CHECK(chars[1].values()[k] == w->sign(g));
    }
    for (const auto& s : cx.simplices(1)) CHECK(cx.vertex_types(s) == SimpleSet{0, 1});
}

TEST_CASE("simplex counts") {
    for (auto [t, n] : {std::pair{CartanType::B, 2}, {CartanType::G, 2}, {CartanType::A, 3}, {CartanType::B, 3}}) {
        auto w = weyl(t, n);
        auto cx = CoxeterComplex::full(w);
        std::size_t expect = 0;
        int euler = 0;
        for (const auto& I : all_subsets(n))
            if (static_cast<int>(I.size()) < n) {
                std::size_t k = static_cast<std::size_t>(w->order() / w->parabolic(I)->order());
                expect += k;
                euler += ((n - static_cast<int>(I.size()) - 1) % 2 ? -1 : 1) * static_cast<int>(k);
            }
        CHECK(cx.size() == expect);
        CHECK(euler == 1 + (n % 2 ? 1 : -1));
        auto sub = CoxeterComplex::sub(w, {});
        CHECK(sub.size() == cx.size());
        for (int r = 0; r <= cx.top(); ++r) CHECK(sub.simplices(r) == cx.simplices(r));
    }
}

TEST_CASE("the A3 subcomplex for I0 = {s1, s3} is two points") {
    auto w = weyl(CartanType::A, 3);
    auto cx = CoxeterComplex::sub(w, {0, 2});
    CHECK(cx.top() == 0);
    CHECK(cx.size() == 2);
    ChainComplexQ cc(cx);
    CHECK(cc.betti() == std::vector<std::size_t>{2});
    for (const auto& s : cx.simplices(0)) CHECK(s.I == SimpleSet{0, 2});
    // The element of N(W_I0) swapping the two points has Lefschetz number 0 = 1 + det on I0 perp.
    for (int h : cx.acting_group()->elements()) {
        CHECK(cc.chain_lefschetz(h) == expected_lefschetz(cx, h));
        CHECK(fixed_coset_count(cx, h, {0, 2}) == induced_coset_count(cx, h, {0, 2}));
    }
    try {
        CoxeterComplex::sub(w, {0, 1, 2});
        FAIL("expected EmptySphere");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySphere);
    }
}

TEST_CASE("Lefschetz numbers of the identity and of reflections") {
    auto w = weyl(CartanType::A, 3);
    auto cx = CoxeterComplex::full(w);
    ChainComplexQ cc(cx);
    CHECK(cc.chain_lefschetz(w->identity()) == 2);
    for (int s = 0; s < 3; ++s) {
        int g = w->simple_reflection(s);
        CHECK(cc.chain_lefschetz(g) == 0);
        CHECK(cc.homology_lefschetz(g) == 0);
        CHECK(cc.fixed_euler(g) == 0);
    }
    CHECK(cc.fixed_euler(w->longest()) == cc.homology_lefschetz(w->longest()));
}

TEST_CASE("every structural check passes and the corrupted formula fails") {
    for (auto [t, n] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}, {CartanType::G, 2}, {CartanType::A, 3},
                        {CartanType::B, 3}, {CartanType::C, 3}}) {
        auto w = weyl(t, n);
        auto cx = CoxeterComplex::full(w);
        CHECK(all_pass(complex_checks(cx)));
        CHECK_FALSE(all_pass(complex_checks(cx, true)));
    }
    auto a3 = weyl(CartanType::A, 3);
    for (SimpleSet i0 : {SimpleSet{0}, SimpleSet{1}, SimpleSet{0, 2}, SimpleSet{0, 1}}) {
        auto cx = CoxeterComplex::sub(a3, i0);
        CHECK(all_pass(complex_checks(cx)));
        CHECK_FALSE(all_pass(complex_checks(cx, true)));
    }
    auto b2 = weyl(CartanType::B, 2);
    for (SimpleSet i0 : {SimpleSet{0}, SimpleSet{1}}) CHECK(all_pass(complex_checks(CoxeterComplex::sub(b2, i0))));
}
