#include <catch2/catch_amalgamated.hpp>

#include <eqcyc/cocyclic.hpp>

using namespace eqcyc;

TEST_CASE("the point object verifies all identity families") {
    CocyclicObject c = point_object(5);
    CHECK(verify_cocyclic(c).ok);
    CHECK(verify_derived(c).ok);
}

TEST_CASE("a corrupted t is reported with a witness") {
    CocyclicObject c = point_object(4);
    c.t[2] = -c.t[2];
    auto r = verify_cocyclic(c);
    CHECK_FALSE(r.ok);
    bool witnessed = false;
    for (const auto& s : r.failures)
        if (s.find("n=2") != std::string::npos) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("point Hochschild cohomology is 1,0,0") {
    CocyclicObject c = point_object(5);
    CHECK(hochschild(c, 0).dim == 1);
    CHECK(hochschild(c, 1).dim == 0);
    CHECK(hochschild(c, 2).dim == 0);
}

TEST_CASE("point cyclic cohomology is 1,0,1 with truncation guard") {
    CocyclicObject c = point_object(5);
    CHECK(cyclic_total(c, 0).dim == 1);
    CHECK(cyclic_total(c, 1).dim == 0);
    CHECK(cyclic_total(c, 2).dim == 1);
    CHECK(cyclic_total(c, 3).dim == 0);
    CHECK_THROWS_AS(cyclic_total(c, 4), EngineError);
    try {
        cyclic_total(c, 4);
    } catch (const EngineError& e) {
        CHECK(std::string(e.code()) == "truncation-unsafe");
    }
}

TEST_CASE("point lambda cohomology matches cyclic cohomology") {
    CocyclicObject c = point_object(5);
    for (int n = 0; n <= 3; ++n) CHECK(lambda_cohomology(c, n).dim == cyclic_total(c, n).dim);
}

TEST_CASE("point periodicity S: HC^0 -> HC^2 is an isomorphism") {
    CocyclicObject c = point_object(6);
    auto p = periodicity_pair(c, 0);
    CHECK(p.low.dim == 1);
    CHECK(p.high.dim == 1);
    CHECK(rank(p.s_matrix) == 1);
}

TEST_CASE("total differential squares to zero on the point object") {
    CocyclicObject c = point_object(6);
    for (int n = 0; n + 2 <= c.n_max() - 1; ++n)
        CHECK((total_differential(c, n + 1) * total_differential(c, n)).is_zero());
}

TEST_CASE("periodicity shift is a chain map") {
    CocyclicObject c = point_object(6);
    for (int n = 0; n + 3 <= c.n_max() - 1; ++n)
        CHECK(total_differential(c, n + 2) * periodicity_shift(c, n) ==
              periodicity_shift(c, n + 1) * total_differential(c, n));
}

TEST_CASE("periodic cohomology of the point stabilizes at dim 1, 0") {
    CocyclicObject c = point_object(8);
    auto even = periodic_cohomology(c, 0);
    CHECK(even.dim == 1);
    CHECK(even.stabilized);
    auto odd = periodic_cohomology(c, 1);
    CHECK(odd.dim == 0);
}

TEST_CASE("degree guards throw") {
    CocyclicObject c = point_object(3);
    CHECK_THROWS_AS(hochschild(c, 3), EngineError);
    CHECK_THROWS_AS(lambda_cohomology(c, 3), EngineError);
    CHECK_THROWS_AS(periodicity_pair(c, 1), EngineError);
}
