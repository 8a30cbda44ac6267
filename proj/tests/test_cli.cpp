// JSON document round-trips and schema diagnostics for the batch front-end.

#include "eqcyc/json_io.hpp"
#include "eqcyc/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace eqcyc;

TEST_CASE("hopf presentations round-trip through JSON", "[cli]") {
    for (const Hopf& h : {fixtures::sweedler_h4(),
                          fixtures::hopf_group_algebra(fixtures::z2_table(), {"e", "g"}),
                          fixtures::hopf_function_algebra(fixtures::s3_table())}) {
        Json doc = hopf_to_json(h);
        Hopf back = hopf_from_json(doc, "doc");
        REQUIRE(back.alg.dim == h.alg.dim);
        REQUIRE(back.alg.mult == h.alg.mult);
        REQUIRE(back.alg.unit == h.alg.unit);
        REQUIRE(back.comult == h.comult);
        REQUIRE(back.counit == h.counit);
        REQUIRE(back.antipode == h.antipode);
        REQUIRE(back.antipode_inv == h.antipode_inv);
        REQUIRE(verify_hopf(back).ok);
        // serialization is deterministic byte-for-byte
        REQUIRE(doc.dump(2) == hopf_to_json(back).dump(2));
    }
}

TEST_CASE("module algebras round-trip through JSON", "[cli]") {
    for (const auto& fx : {fixtures::f1(), fixtures::f2(), fixtures::f3()}) {
        Json doc = module_algebra_to_json(fx.hopf, fx.base);
        auto [h, ma] = module_algebra_from_json(doc);
        REQUIRE(h.comult == fx.hopf.comult);
        REQUIRE(ma.alg.mult == fx.base.alg.mult);
        REQUIRE(ma.mod.act == fx.base.mod.act);
        REQUIRE(verify_module_algebra(h, ma).ok);
    }
}

TEST_CASE("subgroup data round-trip through JSON", "[cli]") {
    SubgroupDatum sd;
    sd.a = fixtures::hopf_function_algebra(fixtures::s3_table());
    sd.a0 = fixtures::hopf_function_algebra(fixtures::z2_table());
    sd.p = Mat(2, 6, sd.a.field());
    sd.p.set(0, 0, Scalar::one(sd.a.field()));
    sd.p.set(1, 1, Scalar::one(sd.a.field()));
    SubgroupDatum back = subgroup_from_json(subgroup_to_json(sd));
    REQUIRE(back.p == sd.p);
    REQUIRE(back.a.comult == sd.a.comult);
    REQUIRE(back.a0.antipode == sd.a0.antipode);
    REQUIRE(verify_subgroup(back).ok);
}

namespace {

EquivariantFredholmModule small_fredholm() {
    const FieldPtr& q = Field::rationals();
    EquivariantFredholmModule fm;
    fm.co.a = trivial_hopf(q);
    fm.co.b = function_algebra(2, {"d0", "d1"}, q);
    fm.co.alpha = Mat::identity(2, q);
    fm.dim = 4;
    fm.pi = Mat(16, 2, q);
    auto set_diag = [&](int col, std::vector<long> d) {
        for (int i = 0; i < 4; ++i)
            if (d[i]) fm.pi.set(i * 4 + i, col, Scalar(Rat(d[i]), q));
    };
    set_diag(0, {0, 0, 1, 0});
    set_diag(1, {1, 1, 0, 1});
    fm.f = Mat::from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}, q);
    fm.gamma =
        Mat::from_ints({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, q);
    fm.pi_u = detail::vec_op(Mat::identity(4, q));
    return fm;
}

} // namespace

TEST_CASE("Fredholm modules round-trip through JSON", "[cli]") {
    EquivariantFredholmModule fm = small_fredholm();
    Json doc = fredholm_to_json(fm);
    EquivariantFredholmModule back = fredholm_from_json(doc);
    REQUIRE(back.dim == fm.dim);
    REQUIRE(back.pi == fm.pi);
    REQUIRE(back.f == fm.f);
    REQUIRE(back.gamma == fm.gamma);
    REQUIRE(back.pi_u == fm.pi_u);
    REQUIRE(back.co.alpha == fm.co.alpha);
    REQUIRE(verify_fredholm(back).ok);
    // index values survive the round-trip
    REQUIRE(ind_f(back, back.co.b.basis(0)).coords == ind_f(fm, fm.co.b.basis(0)).coords);
}

TEST_CASE("schema errors carry field diagnostics", "[cli]") {
    Json doc = hopf_to_json(fixtures::sweedler_h4());
    doc.erase("comult");
    REQUIRE_THROWS_MATCHES(hopf_from_json(doc, "doc"), SchemaError,
                           Catch::Matchers::Predicate<SchemaError>([](const SchemaError& e) {
                               return std::string(e.what()).find("comult") != std::string::npos;
                           }));
    Json bad = hopf_to_json(fixtures::sweedler_h4());
    bad["mult"][0].erase(0); // row with the wrong width
    REQUIRE_THROWS_AS(hopf_from_json(bad, "doc"), SchemaError);

    // scalar coordinates must fit the field degree
    FieldPtr q = Field::rationals();
    REQUIRE_THROWS_AS(scalar_from_json(Json::array({"1", "2"}), q, "x"), SchemaError);
    REQUIRE(scalar_from_json(Json("3/2"), q, "x") == Scalar(Rat(3, 2), q));
    REQUIRE(scalar_from_json(Json(-4), q, "x") == Scalar(Rat(-4), q));
}

TEST_CASE("extension-field scalars serialize coordinatewise", "[cli]") {
    FieldPtr qi = Field::extension({Rat(1), Rat(0)}); // x^2 + 1
    Scalar s(qi, {Rat(1, 2), Rat(-3)});
    Json j = scalar_to_json(s);
    REQUIRE(j.size() == 2);
    REQUIRE(scalar_from_json(j, qi, "x") == s);
    Mat m(1, 1, qi);
    m.set(0, 0, s);
    REQUIRE(mat_from_json(mat_to_json(m), 1, 1, qi, "m") == m);
}
