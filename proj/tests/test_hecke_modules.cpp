#include "doctest.h"

#include "ahecke/error.hpp"
#include "ahecke/finite_hecke.hpp"
#include "ahecke/hecke_modules.hpp"

using namespace ahecke;

namespace {

std::shared_ptr<const HeckeContext> context(CartanType t, int n, LatticeKind k, const ParamAssignment* p = nullptr) {
    auto rd = std::make_shared<RootDatum>(t, n, k);
    auto aff = std::make_shared<AffineWeylGroup>(WeylGroup::create(rd));
    return HeckeContext::create(aff, p ? *p : ParamAssignment::equal(*rd));
}

Specialization spec_for(const HeckeContext& c, std::vector<Rational> qs) {
    qs.resize(c.params().num_symbols, qs.back());
    return Specialization::from_q(qs);
}

Rational power(const Rational& t, int k) {
    Rational r = 1;
    for (int i = 0; i < std::abs(k); ++i) r *= t;
    return k >= 0 ? r : Rational(1) / r;
}

// chi_t(x) = prod t_i^{x_i}
Rational character_value(const std::vector<Rational>& t, const IntVec& x) {
    Rational r = 1;
    for (std::size_t i = 0; i < x.size(); ++i) r *= power(t[i], x[i]);
    return r;
}

}  // namespace

TEST_CASE("principal series satisfy every relation and have dimension |W|") {
    ParamAssignment unequal{{1}, {2}};
    struct Case {
        std::shared_ptr<const HeckeContext> ctx;
        std::vector<Rational> q, t;
    };
    std::vector<Case> cases{
        {context(CartanType::A, 1, LatticeKind::Root), {4}, {Rational(3, 2)}},
        {context(CartanType::A, 1, LatticeKind::Weight), {4}, {Rational(-5, 3)}},
        {context(CartanType::A, 1, LatticeKind::Root, &unequal), {4, 9}, {Rational(7)}},
        {context(CartanType::A, 2, LatticeKind::Root), {4}, {Rational(2), Rational(-3, 5)}},
        {context(CartanType::A, 2, LatticeKind::Weight), {9}, {Rational(5, 7), Rational(3)}},
        {context(CartanType::B, 2, LatticeKind::Root), {4, 9}, {Rational(2), Rational(1, 3)}},
    };
    for (const auto& c : cases) {
        auto spec = spec_for(*c.ctx, c.q);
        auto m = principal_series(c.ctx, spec, c.t);
        CHECK(m.dim() == static_cast<std::size_t>(c.ctx->finite().order()));
        CHECK_NOTHROW(m.validate());
        CHECK(m.trace(c.ctx->affine().identity()) == c.ctx->finite().order());
        // theta_x has eigenvalues chi_t(w x), w in W.
        const int n = c.ctx->affine().rank();
        for (int i = 0; i < n; ++i) {
            IntVec x(n, 0);
            x[i] = 1;
            x[(i + 1) % n] -= 2;
            Rational expect = 0;
            for (int w = 0; w < c.ctx->finite().order(); ++w) expect += character_value(c.t, c.ctx->finite().act(w, x));
            CHECK(m.theta(x).trace() == expect);
        }
    }
}

TEST_CASE("restriction, induction and dimensions") {
    auto c = context(CartanType::A, 2, LatticeKind::Root);
    auto spec = spec_for(*c, {4});
    auto m = principal_series(c, spec, {Rational(2), Rational(5)});
    for (const auto& I : all_subsets(2)) {
        auto r = res_module(m, I);
        CHECK(r.dim() == 6);
        CHECK_NOTHROW(r.validate());
        auto ind = ind_module(r);
        CHECK(ind.dim() == 6 * (6 / c->finite().parabolic(I)->order()));
        CHECK_NOTHROW(ind.validate());
    }
    auto whole = res_module(m, {0, 1});
    CHECK(whole.gen(0) == m.gen(0));
    CHECK(whole.theta_basis(1) == m.theta_basis(1));

    auto d = d_operator(principal_series(context(CartanType::A, 1, LatticeKind::Root), spec_for(*context(CartanType::A, 1, LatticeKind::Root), {4}), {Rational(3)}));
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].first == 1);
    CHECK(d.parts[0].second.dim() == 4);
    CHECK(d.parts[1].first == -1);
    CHECK(d.parts[1].second.dim() == 2);
}

TEST_CASE("the star twist") {
    for (auto lattice : {LatticeKind::Root, LatticeKind::Weight}) {
        auto c = context(CartanType::A, 1, lattice);
        auto m = principal_series(c, spec_for(*c, {4}), {Rational(2, 3)});
        auto tw = twist_star(m);
        CHECK_NOTHROW(tw.validate());
        CHECK(tw.gen(0) == Matrix::identity(2) * Rational(3) - m.gen(0));
        auto back = twist_star(tw);
        for (int s = 0; s < 2; ++s) CHECK(back.gen(s) == m.gen(s));
        CHECK(back.theta_basis(0) == m.theta_basis(0));
        for (std::size_t k = 0; k < c->affine().omega().size(); ++k)
            CHECK(back.omega(static_cast<int>(k)) == m.omega(static_cast<int>(k)));
        // trace on the twist equals the trace of T_w^* on m
        for (const auto& w : witness_family(c->affine(), 3)) {
            Matrix star_w = m.eval(star(im_basis(c, w)));
            CHECK(tw.trace(w) == star_w.trace());
        }
    }
    auto c2 = context(CartanType::A, 2, LatticeKind::Weight);
    auto tw2 = twist_star(principal_series(c2, spec_for(*c2, {4}), {Rational(2), Rational(-1, 3)}));
    CHECK_NOTHROW(tw2.validate());
}

TEST_CASE("D[M] and [M*] agree on traces, and D is an involution") {
    ParamAssignment unequal{{1}, {2}};
    auto c = context(CartanType::A, 1, LatticeKind::Root, &unequal);
    auto m = principal_series(c, spec_for(*c, {4, 9}), {Rational(5, 2)});
    auto d = d_operator(m);
    AffineVirtualModule star_m{{{1, twist_star(m)}}};
    auto cmp = grothendieck_equal(d, star_m, 6);
    CHECK(cmp.equal());
    CHECK(cmp.witnesses.size() == 13);

    AffineVirtualModule plain{{{1, m}}};
    CHECK(grothendieck_equal(d_operator(d), plain, 6).equal());

    AffineVirtualModule wrong{{{-1, twist_star(m)}}};
    auto bad = grothendieck_equal(d, wrong, 6);
    CHECK_FALSE(bad.equal());
    CHECK(bad.first_mismatch == 0);
}

TEST_CASE("module errors") {
    auto c = context(CartanType::A, 1, LatticeKind::Root);
    auto spec = spec_for(*c, {4});
    CHECK_THROWS_AS(theta_character(c, spec, {Rational(0)}), Error);
    std::vector<Matrix> gens(2, Matrix::scalar(1, 2));
    AffineHeckeModule bogus(c, spec, {0}, gens, {Matrix::scalar(1, 3)}, {}, "bogus");
    try {
        bogus.validate();
        FAIL("expected NotAModule");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAModule);
    }
    auto m = principal_series(c, spec, {Rational(2)});
    CHECK_THROWS_AS(twist_star(res_module(m, {})), Error);
}

TEST_CASE("finite induction has dimension [W:W_I] dim N") {
    auto rd = std::make_shared<RootDatum>(CartanType::A, 2, LatticeKind::Root);
    auto sys = CoxeterSystem::of_weyl(WeylGroup::create(rd));
    std::vector<Rational> q{4, 4};
    auto triv = FiniteHeckeModule::one_dim(sys, q, {0}, {1, 1});
    auto ind = induce_module(triv);
    CHECK(ind.dim() == 3);
    CHECK_NOTHROW(ind.validate());
    CHECK(ind.trace(sys->group().identity()) == 3);
}
