#include "doctest.h"

#include "ahecke/characters.hpp"
#include "ahecke/dualities.hpp"
#include "ahecke/error.hpp"

using namespace ahecke;

namespace {

std::shared_ptr<const WeylGroup> weyl(CartanType t, int n, LatticeKind k = LatticeKind::Root) {
    return WeylGroup::create(std::make_shared<RootDatum>(t, n, k));
}

bool all_pass(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}

std::shared_ptr<const HeckeContext> context(CartanType t, int n, LatticeKind k, const ParamAssignment* p = nullptr) {
    auto rd = std::make_shared<RootDatum>(t, n, k);
    auto aff = std::make_shared<AffineWeylGroup>(WeylGroup::create(rd));
    return HeckeContext::create(aff, p ? *p : ParamAssignment::equal(*rd));
}

Specialization spec_for(const HeckeContext& c, std::vector<Rational> qs) {
    qs.resize(c.params().num_symbols, qs.back());
    return Specialization::from_q(qs);
}

}  // namespace

TEST_CASE("Solomon's identity for every irreducible character") {
    for (auto [t, n] : {std::pair{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::B, 2}}) {
        auto w = weyl(t, n);
        for (const auto& chi : irreducible_characters(w->whole())) {
            CHECK(all_pass(solomon_check(chi, "chi")));
            auto bad = solomon_check(chi, "chi", true);
            CHECK_FALSE(bad[0].pass);
        }
    }
}

TEST_CASE("Solomon for the trivial character counts fixed cosets") {
    // sum_I (-1)^{|I|} #{g W_I : w g W_I = g W_I} = det(w), counted directly.
    auto w = weyl(CartanType::A, 3);
    auto whole = w->whole();
    auto recs = solomon_check(ClassFunction::trivial(whole), "1");
    for (std::size_t k = 0; k < whole->classes().size(); ++k) {
        int x = whole->classes()[k][0];
        int total = 0;
        for (const auto& I : all_subsets(3)) {
            auto wi = w->parabolic(I);
            int fixed = 0;
            for (int g : w->min_coset_reps(I))
                if (wi->contains(w->mul(w->mul(w->inverse(g), x), g))) ++fixed;
            total += (I.size() % 2 ? -1 : 1) * fixed;
        }
        CHECK(total == w->sign(x));
        CHECK(recs[k].lhs == std::to_string(total));
    }
}

TEST_CASE("Howlett-Lehrer identity on subgroups of the normalizer") {
    auto a3 = weyl(CartanType::A, 3);
    SimpleSet i0{0, 2};
    auto n = a3->normalizer(i0);
    CHECK(n->order() == 8);
    for (const auto& h : all_subgroups(*n))
        for (const auto& chi : class_indicators(h)) CHECK(all_pass(hl_character_check(i0, h, chi, "ind")));
    CHECK_FALSE(all_pass(hl_character_check(i0, n, ClassFunction::trivial(n), "1", true)));

    auto b2 = weyl(CartanType::B, 2);
    for (SimpleSet s : {SimpleSet{0}, SimpleSet{1}}) {
        auto nb = b2->normalizer(s);
        for (const auto& chi : irreducible_characters(nb)) CHECK(all_pass(hl_character_check(s, nb, chi, "chi")));
    }
    // I0 empty is Solomon's identity.
    auto whole = a3->whole();
    for (const auto& chi : irreducible_characters(whole)) {
        auto hl = hl_character_check({}, whole, chi, "chi");
        auto so = solomon_check(chi, "chi");
        REQUIRE(hl.size() == so.size());
        for (std::size_t k = 0; k < hl.size(); ++k) CHECK(hl[k].lhs == so[k].lhs);
    }
    try {
        hl_character_check(i0, whole, ClassFunction::trivial(whole), "1");
        FAIL("expected NotInNormalizer");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInNormalizer);
    }
}

TEST_CASE("finite Kato duality on one-dimensional modules") {
    auto rd = std::make_shared<RootDatum>(CartanType::A, 1, LatticeKind::Root);
    auto sys = CoxeterSystem::of_weyl(WeylGroup::create(rd));
    auto triv = FiniteHeckeModule::one_dim(sys, {4}, {0}, {1});
    auto recs = kato_finite_check(triv, false);
    REQUIRE(recs.size() == 2);
    // Ind Res of the trivial module is H itself: tr(T_s) = q - 1; minus q gives -1 = tr(T_s^*).
    CHECK(recs[1].lhs == "-1");
    CHECK(recs[1].rhs == "-1");
    CHECK(all_pass(recs));
    CHECK_FALSE(all_pass(kato_finite_check(triv, true)));

    auto b2 = CoxeterSystem::of_weyl(weyl(CartanType::B, 2));
    std::vector<Rational> q{4, 9};
    for (const auto& choice : {std::vector<int>{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
        CHECK(all_pass(kato_finite_check(FiniteHeckeModule::one_dim(b2, q, {0, 1}, choice))));
    CHECK(all_pass(kato_finite_check(dihedral_order4_module(b2, q))));
    auto ind = induce_module(FiniteHeckeModule::one_dim(b2, q, {1}, {-1, -1}));
    CHECK(all_pass(kato_finite_check(ind)));
}

TEST_CASE("affine Kato duality on principal series") {
    auto c = context(CartanType::A, 1, LatticeKind::Weight);
    auto m = principal_series(c, spec_for(*c, {4}), {Rational(3, 7)});
    auto recs = kato_affine_check(m, 4);
    CHECK(all_pass(recs));
    CHECK(recs.size() == 2 * 9);
    CHECK_FALSE(all_pass(kato_affine_check(m, 4, true)));
}

TEST_CASE("chi intertwines and spans the intersection of the L_s") {
    auto c1 = context(CartanType::A, 1, LatticeKind::Weight);
    auto m1 = principal_series(c1, spec_for(*c1, {4}), {Rational(5, 3)});
    auto ind1 = ind_module(res_module(m1, {}));
    Matrix x1 = chi_matrix(m1, ind1);
    CHECK(x1.rows() == 4);
    CHECK(x1.cols() == 2);
    CHECK(all_pass(chi_intertwiner_check(m1)));
    CHECK_FALSE(all_pass(chi_intertwiner_check(m1, true)));

    auto c2 = context(CartanType::A, 2, LatticeKind::Root);
    auto m2 = principal_series(c2, spec_for(*c2, {4}), {Rational(2), Rational(-1, 3)});
    auto recs = chi_intertwiner_check(m2);
    CHECK(all_pass(recs));
    CHECK(chi_matrix(m2, ind_module(res_module(m2, {}))).rows() == 36);
}

TEST_CASE("degenerate ramification datum") {
    auto w = weyl(CartanType::B, 2);
    auto rd = RamificationDatum::build(w, {}, RamificationMode::Degenerate, {4, 9});
    CHECK(rd.gamma().size() == 8);
    REQUIRE(rd.delta().size() == 2);
    CHECK(rd.delta()[0] == w->datum().simple(0));
    CHECK(rd.delta()[1] == w->datum().simple(1));
    CHECK(rd.r_lambda()->order() == 8);
    CHECK(rd.generator_params() == std::vector<Rational>{4, 9});
    CHECK(all_pass(rd.invariant_records()));
    for (int g = 0; g < w->order(); ++g) {
        CHECK(rd.length_perp(g) == w->length(g));
        CHECK(rd.v_of(0) == w->reflection(rd.gamma()[0]));
    }
    auto m = FiniteHeckeModule::one_dim(rd.r_lambda(), rd.generator_params(), {0, 1}, {1, -1});
    auto hl = hl_analogue_check(rd, m);
    auto kato = kato_finite_check(m);
    CHECK(all_pass(hl));
    REQUIRE(hl.size() == kato.size());
    for (std::size_t k = 0; k < hl.size(); ++k) CHECK(hl[k].lhs == kato[k].lhs);
}

TEST_CASE("ramification datum for A3 with I0 = {s1, s3}") {
    auto w = weyl(CartanType::A, 3);
    auto rd = RamificationDatum::build(w, {0, 2}, RamificationMode::FullStabilizer, {9});
    CHECK(rd.w_lambda()->order() == 2);
    CHECK(rd.gamma().size() == 2);
    REQUIRE(rd.delta().size() == 1);
    CHECK(rd.delta()[0] == w->datum().simple(1));
    CHECK(rd.r_lambda()->order() == 2);
    CHECK(rd.c_trivial());
    CHECK(all_pass(rd.invariant_records()));
    int v = rd.r_lambda()->generator(0);
    CHECK(rd.length_perp(v) == 1);
    CHECK(w->det_on_perp(v, {0, 2}) == -1);
    CHECK(rd.p_of(v) == 9);

    auto sys = rd.r_lambda();
    for (int choice : {1, -1}) {
        auto m = FiniteHeckeModule::one_dim(sys, rd.generator_params(), {0}, {choice});
        std::vector<std::string> notes;
        CHECK(all_pass(hl_analogue_check(rd, m, &notes)));
        CHECK_FALSE(all_pass(hl_analogue_check(rd, m, nullptr, true)));
    }
}

TEST_CASE("ramification datum for B2 singletons") {
    auto w = weyl(CartanType::B, 2);
    for (SimpleSet i0 : {SimpleSet{0}, SimpleSet{1}}) {
        auto rd = RamificationDatum::build(w, i0, RamificationMode::FullStabilizer, {4});
        CHECK(rd.w_lambda()->order() == 2);
        CHECK(rd.r_lambda()->order() == 2);
        CHECK(all_pass(rd.invariant_records()));
        auto m = FiniteHeckeModule::one_dim(rd.r_lambda(), rd.generator_params(), {0}, {1});
        CHECK(all_pass(hl_analogue_check(rd, m)));
    }
    CHECK_THROWS_AS(RamificationDatum::build(w, {0}, RamificationMode::Degenerate, {4}), Error);
}
