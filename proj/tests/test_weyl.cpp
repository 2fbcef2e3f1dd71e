#include "doctest.h"

#include "ahecke/characters.hpp"
#include "ahecke/error.hpp"
#include "ahecke/weyl.hpp"

#include <numeric>

using namespace ahecke;

namespace {

std::shared_ptr<const WeylGroup> weyl(CartanType t, int n, LatticeKind k = LatticeKind::Root) {
    return WeylGroup::create(std::make_shared<RootDatum>(t, n, k));
}

}  // namespace

TEST_CASE("group orders and longest element") {
    struct Case {
        CartanType t;
        int n, order, longest;
    };
    for (auto c : {Case{CartanType::A, 1, 2, 1}, Case{CartanType::A, 2, 6, 3}, Case{CartanType::A, 3, 24, 6},
                   Case{CartanType::B, 2, 8, 4}, Case{CartanType::G, 2, 12, 6}, Case{CartanType::D, 4, 192, 12},
                   Case{CartanType::B, 4, 384, 16}}) {
        auto w = weyl(c.t, c.n);
        CHECK(w->order() == c.order);
        CHECK(w->length(w->longest()) == c.longest);
    }
}

TEST_CASE("reduced words reproduce elements and have the right length") {
    auto w = weyl(CartanType::B, 3, LatticeKind::Weight);
    for (int g = 0; g < w->order(); ++g) {
        auto word = w->reduced_word(g);
        CHECK(static_cast<int>(word.size()) == w->length(g));
        CHECK(w->from_word(word) == g);
    }
}

TEST_CASE("poincare polynomial of A3 at 1 step") {
    auto w = weyl(CartanType::A, 3);
    std::vector<int> counts(7, 0);
    for (int g = 0; g < w->order(); ++g) ++counts[w->length(g)];
    CHECK(counts == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("character tables satisfy orthogonality") {
    struct Case {
        CartanType t;
        int n;
        std::vector<int> degrees;
    };
    for (auto c : {Case{CartanType::A, 1, {1, 1}}, Case{CartanType::A, 2, {1, 1, 2}},
                   Case{CartanType::A, 3, {1, 1, 2, 3, 3}}, Case{CartanType::B, 2, {1, 1, 1, 1, 2}},
                   Case{CartanType::G, 2, {1, 1, 1, 1, 2, 2}}}) {
        auto w = weyl(c.t, c.n);
        auto chars = irreducible_characters(w->whole());
        REQUIRE(chars.size() == c.degrees.size());
        for (std::size_t i = 0; i < chars.size(); ++i) {
            CHECK(chars[i](w->identity()) == c.degrees[i]);
            for (std::size_t j = 0; j < chars.size(); ++j)
                CHECK(inner_product(chars[i], chars[j]) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("Frobenius reciprocity") {
    auto w = weyl(CartanType::A, 3);
    auto g = w->whole();
    auto k = w->parabolic({0, 2});
    auto chars_g = irreducible_characters(g);
    auto chars_k = irreducible_characters(k);
    for (const auto& x : chars_g)
        for (const auto& y : chars_k) CHECK(inner_product(induce(y, g), x) == inner_product(y, restrict_to(x, k)));
}

TEST_CASE("A3 with I0 = {s1, s3}") {
    auto w = weyl(CartanType::A, 3);
    SimpleSet i0{0, 2};
    auto stab = w->stabilizer(i0);
    CHECK(stab->order() == 2);
    int v = w->mul(w->longest(), w->from_word({0, 2}));
    CHECK(stab->contains(v));
    CHECK(w->det_on_perp(v, i0) == -1);
    CHECK(w->det_on_perp(w->identity(), i0) == 1);
    CHECK(w->normalizer(i0)->order() == 8);
    CHECK_THROWS_AS(w->det_on_perp(w->simple_reflection(1), i0), Error);
    // span of {s1,s3} holds only the roots +-alpha1, +-alpha3
    CHECK(w->c_set(i0, {0, 2}).size() == 8);
    CHECK(w->c_set(i0, {0, 1}).empty());
    CHECK(w->c_set(i0, {0, 1, 2}).size() == 24);
}

TEST_CASE("c_set membership agrees with reflections lying in the parabolic") {
    auto w = weyl(CartanType::B, 3);
    for (const auto& i0 : all_subsets(3))
        for (const auto& i : all_subsets(3)) {
            auto wi = w->parabolic(i);
            auto c = w->c_set(i0, i);
            std::vector<char> in(w->order(), 0);
            for (int x : c) in[x] = 1;
            for (int x = 0; x < w->order(); ++x) {
                bool direct = true;
                for (int a : i0) direct = direct && wi->contains(w->reflection(w->act_root(x, w->datum().simple(a))));
                CHECK(direct == static_cast<bool>(in[x]));
            }
        }
}

TEST_CASE("double cosets partition saturated sets") {
    auto w = weyl(CartanType::A, 3);
    SimpleSet i0{0, 2};
    auto h = w->stabilizer(i0);
    for (const auto& i : all_subsets(3)) {
        auto c = w->c_set(i0, i);
        auto dc = double_cosets(*w, *w->parabolic(i), c, *h);
        std::size_t total = 0;
        for (const auto& d : dc) total += d.elements.size();
        CHECK(total == c.size());
    }
    std::vector<int> partial{w->identity()};
    CHECK_THROWS_AS(double_cosets(*w, *w->parabolic({0}), partial, *h), Error);
}

TEST_CASE("class function errors") {
    auto w = weyl(CartanType::A, 2);
    auto k = w->parabolic({0});
    auto other = w->parabolic({1});
    CHECK_THROWS_AS(restrict_to(ClassFunction::trivial(k), other), Error);
    CHECK_THROWS_AS(induce(ClassFunction::trivial(k), other), Error);
    std::vector<Rational> bad(w->order(), Rational(0));
    bad[w->simple_reflection(0)] = 1;
    CHECK_THROWS_AS(ClassFunction::from_element_values(w->whole(), bad), Error);
}

TEST_CASE("subgroup enumeration of S3") {
    auto w = weyl(CartanType::A, 2);
    auto subs = all_subgroups(*w->whole());
    // trivial, three of order 2, one of order 3, whole
    CHECK(subs.size() == 6);
}
