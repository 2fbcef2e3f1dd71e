#include "doctest.h"

#include "ahecke/error.hpp"
#include "ahecke/root_datum.hpp"

using namespace ahecke;

TEST_CASE("root counts") {
    struct Case {
        CartanType t;
        int n, roots;
    };
    for (auto c : {Case{CartanType::A, 1, 2}, Case{CartanType::A, 2, 6}, Case{CartanType::A, 3, 12},
                   Case{CartanType::A, 4, 20}, Case{CartanType::B, 2, 8}, Case{CartanType::B, 3, 18},
                   Case{CartanType::C, 3, 18}, Case{CartanType::B, 4, 32}, Case{CartanType::D, 4, 24},
                   Case{CartanType::G, 2, 12}}) {
        RootDatum rd(c.t, c.n, LatticeKind::Root);
        CHECK(rd.num_roots() == c.roots);
        CHECK(static_cast<int>(rd.positive_roots().size()) == c.roots / 2);
    }
}

TEST_CASE("pairing of a root with its coroot is 2") {
    for (auto lat : {LatticeKind::Root, LatticeKind::Weight}) {
        RootDatum rd(CartanType::B, 3, lat);
        for (int r = 0; r < rd.num_roots(); ++r) CHECK(rd.pairing(rd.root(r).x, r) == 2);
    }
}

TEST_CASE("B2 highest coroot belongs to a short root") {
    RootDatum rd(CartanType::B, 2, LatticeKind::Root);
    // short simple root is alpha_2; highest short root is alpha_1 + alpha_2
    CHECK(rd.root(rd.alpha0()).root_coords == IntVec{1, 1});
    CHECK(rd.num_orbits() == 2);
    CHECK(rd.orbit(rd.simple(0)) != rd.orbit(rd.simple(1)));
}

TEST_CASE("A1 coroot parity depends on the lattice") {
    RootDatum root(CartanType::A, 1, LatticeKind::Root), weight(CartanType::A, 1, LatticeKind::Weight);
    CHECK(root.coroot_in_2y(root.simple(0)));
    CHECK_FALSE(weight.coroot_in_2y(weight.simple(0)));
    CHECK(root.lattice_index() == 1);
    CHECK(weight.lattice_index() == 2);
}

TEST_CASE("lattice index of weight lattices") {
    CHECK(RootDatum(CartanType::A, 3, LatticeKind::Weight).lattice_index() == 4);
    CHECK(RootDatum(CartanType::D, 4, LatticeKind::Weight).lattice_index() == 4);
    CHECK(RootDatum(CartanType::G, 2, LatticeKind::Weight).lattice_index() == 1);
}

TEST_CASE("unsupported types") {
    CHECK_THROWS_AS(RootDatum(CartanType::D, 3, LatticeKind::Root), Error);
    CHECK_THROWS_AS(RootDatum(CartanType::A, 5, LatticeKind::Root), Error);
    CHECK_THROWS_AS(parse_cartan_type("E"), Error);
}

TEST_CASE("lambda* may differ only where the coroot lies in 2Y") {
    RootDatum root(CartanType::A, 1, LatticeKind::Root), weight(CartanType::A, 1, LatticeKind::Weight);
    ParamAssignment p{{1}, {2}};
    CHECK_NOTHROW(p.validate(root));
    CHECK_THROWS_AS(p.validate(weight), Error);
}
