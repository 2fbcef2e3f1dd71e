#include "doctest.h"

#include "ahecke/error.hpp"
#include "ahecke/suites.hpp"

using namespace ahecke;

namespace {

Instance make(CartanType t, int n) {
    Instance in;
    in.type = t;
    in.rank = n;
    return in;
}

}  // namespace

TEST_CASE("report round trip through JSON") {
    VerificationReport r;
    r.suite = "demo";
    r.instance = {{"type", "A1"}, {"q", "4"}};
    r.add({"x = y", "T[s1]", "-1/3", "-1/3", true});
    r.add({"x = y", "T[s0]", "2", "-2", false});
    r.notes = {"one note"};
    r.wall_time = 1.5;
    auto back = report_from_json(to_json(r, true));
    CHECK(back == r);
    CHECK(back.wall_time == 1.5);
    CHECK_FALSE(back.pass());
    CHECK(back.failures() == 1);
    CHECK(back.first_failure()->witness == "T[s0]");
    CHECK(to_json(r).find("wall_time") == std::string::npos);
    CHECK(to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("suites are deterministic") {
    auto in = make(CartanType::B, 2);
    auto a = run_solomon(in), b = run_solomon(in);
    CHECK(a == b);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.pass());
    CHECK(a.records.size() == 25);
}

TEST_CASE("parameters per generator follow root orbits") {
    RootDatum b2(CartanType::B, 2, LatticeKind::Root);
    CHECK(finite_params(b2, {4, 9}) == std::vector<Rational>{4, 9});
    CHECK(finite_params(b2, {4}) == std::vector<Rational>{4, 4});
    RootDatum a2(CartanType::A, 2, LatticeKind::Root);
    CHECK(finite_params(a2, {4, 9}) == std::vector<Rational>{4, 4});
}

TEST_CASE("failed hypotheses become failing records") {
    auto in = make(CartanType::A, 2);
    in.I0 = SimpleSet{0, 1};
    auto r = run_complex(in);
    REQUIRE(r.records.size() == 1);
    CHECK_FALSE(r.pass());
    CHECK(r.records[0].lhs.find("EmptySphere") != std::string::npos);
    CHECK_THROWS_AS(run_suite("nonsense", in), Error);
}

TEST_CASE("datum files") {
    auto in = apply_datum_file(Instance{},
                               R"({"cartan_type": "B", "rank": 2, "lattice_kind": "weight", "lambda": [1, 1], "lambda_star": [1, 1]})");
    CHECK(in.type == CartanType::B);
    CHECK(in.rank == 2);
    CHECK(in.lattice == LatticeKind::Weight);
    REQUIRE(in.lambda);
    CHECK(in.lambda->lambda == std::vector<int>{1, 1});
    CHECK_THROWS_AS(apply_datum_file(Instance{}, "{\"rank\": 2}"), Error);
}

TEST_CASE("small suites pass and fail under the corrupted sign") {
    auto in = make(CartanType::A, 2);
    in.bound = 2;
    for (const auto& name : suite_names()) {
        auto good = run_suite(name, in);
        CHECK_MESSAGE(good.pass(), name);
        in.corrupt = true;
        CHECK_MESSAGE(!run_suite(name, in).pass(), name);
        in.corrupt = false;
    }
}
