// Batch front-end: parse presentation files, dispatch computations, emit
// deterministic JSON (or plain-table) reports.  Exit codes: 0 all checks
// pass, 1 check failure or engine error, 2 usage/schema/budget error.

#include "eqcyc/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace eqcyc;

namespace {

constexpr const char* kEngine = "eqcyc 0.1.0";

Json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError(path + ": document must be an object with a \"kind\" string");
    return j;
}

std::string kind_of(const Json& j) { return j["kind"].get<std::string>(); }

void require_kind(const Json& j, const std::string& kind, const std::string& command) {
    if (kind_of(j) != kind)
        throw SchemaError("command \"" + command + "\" needs a \"" + kind +
                          "\" document, got \"" + kind_of(j) + "\"");
}

// Parse an element given as a named basis element or a comma-separated
// coordinate vector.
Mat parse_element(const std::string& text, const Algebra& a, const std::string& what) {
    for (int i = 0; i < a.dim; ++i)
        if (a.name_of(i) == text) return a.basis(i);
    Mat out(a.dim, 1, a.field);
    std::stringstream ss(text);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= a.dim) throw SchemaError(what + ": too many coordinates");
        Scalar v(Scalar::parse_rational(tok), a.field);
        if (!v.is_zero()) out.set(i, 0, v);
        ++i;
    }
    if (i != a.dim)
        throw SchemaError(what + ": expected a basis-element name or " + std::to_string(a.dim) +
                          " comma-separated coordinates");
    return out;
}

// --- table rendering ----------------------------------------------------------

bool is_scalar_leaf(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const Json& e : j)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

void print_table(std::ostream& os, const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (is_scalar_leaf(v)) {
                os << key << ": " << v.dump() << "\n";
            } else {
                print_table(os, v, key);
            }
        }
    } else if (j.is_array()) {
        int i = 0;
        for (const Json& e : j) {
            std::string key = prefix + "[" + std::to_string(i++) + "]";
            if (is_scalar_leaf(e))
                os << key << ": " << e.dump() << "\n";
            else
                print_table(os, e, key);
        }
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

int emit(const Json& report, const std::string& format) {
    if (format == "table")
        print_table(std::cout, report, "");
    else
        std::cout << report.dump(2) << "\n";
    bool ok = !report.contains("ok") || report["ok"].get<bool>();
    return ok ? 0 : 1;
}

Json check_entry(const std::string& name, const VerifyReport& r) {
    Json c;
    c["name"] = name;
    c["ok"] = r.ok;
    if (!r.ok) c["failures"] = r.failures;
    return c;
}

// --- canned fixtures ------------------------------------------------------------

// Trivial quantum group, functions on two points, H = C^2 (-) (+) C^2 (+);
// pi(d_i) supported so that F p_- F != p_+ on one summand, index +-1.
EquivariantFredholmModule worked_index_module() {
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

// Functions on two points coacted on by functions on Z/2 via translation,
// with the regular corepresentation on each graded summand.
EquivariantFredholmModule equivariant_index_module() {
    const FieldPtr& q = Field::rationals();
    EquivariantFredholmModule fm;
    fm.co.a = fixtures::hopf_function_algebra(fixtures::z2_table(), {"e", "g"}, q);
    fm.co.b = function_algebra(2, {"d0", "d1"}, q);
    fm.co.alpha = Mat(4, 2, q);
    for (int b = 0; b < 2; ++b)
        for (int g = 0; g < 2; ++g) fm.co.alpha.set(g * 2 + (b + g) % 2, b, Scalar::one(q));
    fm.dim = 4;
    fm.pi = Mat(16, 2, q);
    auto set_diag = [&](int col, std::vector<long> d) {
        for (int i = 0; i < 4; ++i)
            if (d[i]) fm.pi.set(i * 4 + i, col, Scalar(Rat(d[i]), q));
    };
    set_diag(0, {0, 1, 1, 0});
    set_diag(1, {1, 0, 0, 1});
    fm.f = Mat::from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}, q);
    fm.gamma =
        Mat::from_ints({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, q);
    Mat swap = Mat::from_ints({{0, 1}, {1, 0}}, q);
    fm.pi_u = Mat(16, 2, q);
    Mat u0 = detail::vec_op(Mat::identity(4, q));
    Mat u1 = detail::vec_op(kron(Mat::identity(2, q), swap));
    for (int i = 0; i < 16; ++i) {
        if (!u0.get(i, 0).is_zero()) fm.pi_u.set(i, 0, u0.get(i, 0));
        if (!u1.get(i, 0).is_zero()) fm.pi_u.set(i, 1, u1.get(i, 0));
    }
    return fm;
}

SubgroupDatum s3_z2_datum() {
    SubgroupDatum sd;
    sd.a = fixtures::hopf_function_algebra(fixtures::s3_table());
    sd.a0 = fixtures::hopf_function_algebra(fixtures::z2_table(), {"e", "g"});
    sd.p = Mat(2, 6, sd.a.field());
    sd.p.set(0, 0, Scalar::one(sd.a.field()));
    sd.p.set(1, 1, Scalar::one(sd.a.field()));
    return sd;
}

Json fixture_document(const std::string& name) {
    if (name == "sweedler-h4") return hopf_to_json(fixtures::sweedler_h4());
    if (name == "trivial" || name == "f1") {
        auto fx = fixtures::f1();
        return module_algebra_to_json(fx.hopf, fx.base);
    }
    if (name == "f2") {
        auto fx = fixtures::f2();
        return module_algebra_to_json(fx.hopf, fx.base);
    }
    if (name == "f3") {
        auto fx = fixtures::f3();
        return module_algebra_to_json(fx.hopf, fx.base);
    }
    if (name == "s3-z2") return subgroup_to_json(s3_z2_datum());
    if (name == "worked-index") return fredholm_to_json(worked_index_module());
    if (name == "f2-index") return fredholm_to_json(equivariant_index_module());
    throw EngineError("unknown-fixture",
                      "known fixtures: sweedler-h4 trivial f1 f2 f3 s3-z2 worked-index f2-index");
}

// --- commands -------------------------------------------------------------------

Json cmd_verify(const Json& doc) {
    Json report;
    report["command"] = "verify";
    report["engine"] = kEngine;
    report["kind"] = kind_of(doc);
    Json checks = Json::array();
    bool ok = true;
    auto add = [&](const std::string& name, const VerifyReport& r) {
        checks.push_back(check_entry(name, r));
        ok = ok && r.ok;
    };
    std::string kind = kind_of(doc);
    if (kind == "hopf") {
        add("hopf-axioms", verify_hopf(hopf_from_json(doc, "document")));
    } else if (kind == "module-algebra") {
        auto [h, ma] = module_algebra_from_json(doc);
        add("hopf-axioms", verify_hopf(h));
        add("module-algebra-laws", verify_module_algebra(h, ma));
    } else if (kind == "subgroup") {
        add("subgroup-surjection", verify_subgroup(subgroup_from_json(doc)));
    } else if (kind == "fredholm") {
        add("fredholm-module", verify_fredholm(fredholm_from_json(doc)));
    } else {
        throw SchemaError("unknown document kind \"" + kind + "\"");
    }
    report["checks"] = std::move(checks);
    report["ok"] = ok;
    return report;
}

Json cmd_cohomology(const Json& doc, const std::string& theory, int max_degree,
                    long long budget) {
    require_kind(doc, "module-algebra", "cohomology");
    auto [h, ma] = module_algebra_from_json(doc);
    int window = theory == "periodic" ? max_degree + 5 : max_degree + 2;
    EquivariantComplex e = build_equivariant(ma, h, window, budget);
    Json report;
    report["command"] = "cohomology";
    report["engine"] = kEngine;
    report["theory"] = theory;
    report["complex_dims"] = e.obj.dims;
    Json dims = Json::array();
    if (theory == "periodic") {
        for (int parity = 0; parity < 2; ++parity) {
            PeriodicResult pr = periodic_cohomology(e.obj, parity);
            Json entry;
            entry["parity"] = parity;
            entry["dim"] = pr.dim;
            entry["stabilized"] = pr.stabilized;
            dims.push_back(std::move(entry));
        }
    } else {
        for (int n = 0; n <= max_degree; ++n) {
            CohomologyResult res;
            if (theory == "hochschild")
                res = hochschild(e.obj, n);
            else if (theory == "cyclic")
                res = cyclic_total(e.obj, n);
            else if (theory == "lambda")
                res = lambda_cohomology(e.obj, n);
            else
                throw SchemaError("unknown theory \"" + theory +
                                  "\" (hochschild|cyclic|lambda|periodic)");
            Json entry;
            entry["degree"] = n;
            entry["dim"] = res.dim;
            dims.push_back(std::move(entry));
        }
    }
    report["dims"] = std::move(dims);
    report["ok"] = true;
    return report;
}

Json cmd_pair(const Json& doc, int max_degree, long long budget, const std::string& omega,
              const std::string& rho_text) {
    require_kind(doc, "module-algebra", "pair");
    auto [h, ma] = module_algebra_from_json(doc);
    EquivariantComplex e = build_equivariant(ma, h, max_degree + 1, budget);
    RightModule x = trivial_module(h, 1);
    InvariantIdempotent p = check_idempotent(h, x, ma, ma.alg.unit);
    Json report;
    report["command"] = "pair";
    report["engine"] = kEngine;
    report["idempotent"] = "unit";
    std::optional<Mat> rho;
    if (!rho_text.empty()) rho = parse_element(rho_text, h.alg, "--rho");
    Json pairs = Json::array();
    bool ok = true;
    for (int n = 0; n <= max_degree; n += 2) {
        CohomologyResult gens = lambda_cohomology(e.obj, n);
        for (int g = 0; g < gens.dim; ++g) {
            Mat f = gens.representatives.column(g);
            InvariantFunctional fn = pair_even(e, f, n, p);
            Json entry;
            entry["degree"] = n;
            entry["generator"] = g;
            entry["character"] = col_to_json(fn.coords);
            entry["at_unit"] = scalar_to_json(fn.at(h.alg.unit));
            if (!omega.empty())
                entry["at_omega"] =
                    scalar_to_json(fn.at(parse_element(omega, h.alg, "--omega")));
            if (rho) {
                EquivariantComplex tw = build_twisted(ma.alg, ma.mod.act_by(*rho),
                                                      max_degree + 1, budget);
                Mat ftw = rho_star(e, tw, *rho, n) * f;
                Scalar lhs = pair_twisted(tw, ftw, n, p, h, *rho);
                Scalar rhs = fn.at(*rho);
                entry["twisted_value"] = scalar_to_json(lhs);
                entry["twisted_square_ok"] = (lhs == rhs);
                ok = ok && lhs == rhs;
            }
            pairs.push_back(std::move(entry));
        }
    }
    report["pairings"] = std::move(pairs);
    report["ok"] = ok;
    return report;
}

Json cmd_ktheory(const Json& doc, unsigned seed) {
    require_kind(doc, "module-algebra", "ktheory");
    auto [h, ma] = module_algebra_from_json(doc);
    CrossedProduct cp = crossed_product(h, ma);
    K0Info k0 = k0_semisimple(cp);
    Json report;
    report["command"] = "ktheory";
    report["engine"] = kEngine;
    report["crossed_product_dim"] = cp.alg.dim;
    report["k0_rank"] = k0.rank;
    report["block_sizes"] = k0.block_sizes;
    // round-trip the free rank-one module through the two constructions
    RightModule x = trivial_module(h, 1);
    InvariantIdempotent p = check_idempotent(h, x, ma, ma.alg.unit);
    JulgPresentation jp = julg_forward(h, ma, cp, p);
    RightModule back = julg_reverse(cp, jp.k, jp.q);
    IsoResult iso = iso_test(cp.alg, jp.xp, back, seed);
    report["julg"] = Json{{"k", jp.k},
                          {"module_dim", jp.xp.dim},
                          {"round_trip", iso.verdict}};
    report["ok"] = iso.verdict == "certified-iso";
    return report;
}

Json cmd_index(const Json& doc, int max_degree, long long budget, const std::string& rho_text) {
    require_kind(doc, "fredholm", "index");
    EquivariantFredholmModule fm = fredholm_from_json(doc);
    Json report;
    report["command"] = "index";
    report["engine"] = kEngine;
    VerifyReport vr = verify_fredholm(fm);
    report["checks"] = Json::array({check_entry("fredholm-module", vr)});
    if (!vr.ok) {
        report["ok"] = false;
        return report;
    }
    Hopf dual = dual_hopf(fm.co.a);
    Mat rho = rho_text.empty() ? modular_element(dual).element
                               : parse_element(rho_text, dual.alg, "--rho");
    report["modular_element"] = col_to_json(rho);
    ModuleAlgebra ma{fm.co.b, induced_module(fm.co)};
    EquivariantComplex e = build_equivariant(ma, dual, 2 * max_degree + 1, budget);
    bool ok = true;
    Json table = Json::array();
    for (int i = -1; i < fm.co.b.dim; ++i) {
        Mat cand = i < 0 ? fm.co.b.unit : fm.co.b.basis(i);
        Json entry;
        entry["element"] = i < 0 ? std::string("1") : fm.co.b.name_of(i);
        try {
            IndexCharacter ic = ind_f(fm, cand);
            entry["character"] = col_to_json(ic.coords);
            entry["at_unit"] = scalar_to_json((ic.coords.transpose() * dual.alg.unit).get(0, 0));
            entry["q_index"] = scalar_to_json(q_ind(fm, cand, rho));
            Json checks = Json::array();
            for (int n = 0; n <= max_degree; ++n) {
                VerifyReport tc =
                    index_theorem_check(fm, e, trivial_corep(fm.co.a), cand, n);
                checks.push_back(check_entry("index-theorem-n" + std::to_string(n), tc));
                ok = ok && tc.ok;
            }
            entry["theorem"] = std::move(checks);
        } catch (const EngineError& err) {
            entry["skipped"] = err.code(); // not an invariant idempotent
        }
        table.push_back(std::move(entry));
    }
    report["index_table"] = std::move(table);
    report["ok"] = ok;
    return report;
}

Json cmd_homogeneous(const Json& doc, unsigned seed) {
    require_kind(doc, "subgroup", "homogeneous");
    SubgroupDatum sd = subgroup_from_json(doc);
    Json report;
    report["command"] = "homogeneous";
    report["engine"] = kEngine;
    VerifyReport vr = verify_subgroup(sd);
    report["checks"] = Json::array({check_entry("subgroup-surjection", vr)});
    if (!vr.ok) {
        report["ok"] = false;
        return report;
    }
    HomogeneousSpace hs = build_homogeneous(sd);
    report["dim_B"] = hs.q.b.dim;
    Json classes = Json::array();
    for (size_t t = 0; t < hs.classes.blocks.size(); ++t) {
        SpectralModule sm = spectral_subspace(hs, static_cast<int>(t));
        Json entry;
        entry["class"] = static_cast<int>(t);
        entry["dim_H_t"] = sm.s;
        entry["dim_A_t"] = sm.a_t_basis.cols();
        entry["dim_X_t"] = sm.x_basis.cols();
        entry["generators"] = sm.generators.cols();
        classes.push_back(std::move(entry));
    }
    report["classes"] = std::move(classes);
    CrossedData cd = crossed_blocks(hs);
    Json blocks = Json::array();
    for (const auto& blk : cd.blocks.blocks) blocks.push_back(blk.size);
    report["crossed_blocks"] = std::move(blocks);
    report["block_of_class"] = cd.block_of;
    // decompose the free rank-one equivariant module as a smoke test
    Corep v1{hs.sd.a.alg.unit, 1};
    Mat p_unit(hs.q.b.dim, 1, hs.sd.a.field());
    for (int b = 0; b < hs.q.b.dim; ++b) p_unit.set(b, 0, hs.q.b.unit.get(b, 0));
    Decomposition dec = decompose_equivariant(hs, cd, v1, p_unit, seed);
    report["free_module_multiplicities"] = dec.multiplicities;
    report["decomposition_certificate"] = dec.certificate.verdict;
    report["ok"] = dec.certificate.verdict == "certified-iso";
    return report;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for equivariant cyclic cohomology, K-theory and index pairings"};
    app.require_subcommand(1);

    std::string file, theory = "cyclic", format = "json", omega, rho, out, fixture_name;
    int max_degree = 2;
    long long budget = 200000;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "input JSON document")->required();
        sub->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--seed", seed, "seed for randomized certificates");
        sub->add_option("--budget", budget, "ambient dimension budget")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-degree", max_degree, "top cochain degree")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* c_verify = app.add_subcommand("verify", "check all axioms of a presentation");
    add_common(c_verify, true);
    CLI::App* c_coh = app.add_subcommand("cohomology", "dimension table of a cohomology theory");
    add_common(c_coh, true);
    c_coh->add_option("--theory", theory, "hochschild|cyclic|lambda|periodic");
    CLI::App* c_pair = app.add_subcommand("pair", "pair cyclic cocycles with the unit idempotent");
    add_common(c_pair, true);
    c_pair->add_option("--omega", omega, "evaluate characters at this element of H");
    c_pair->add_option("--rho", rho, "group-like twist for the twisted pairing");
    CLI::App* c_kth = app.add_subcommand("ktheory", "K0 of the crossed product with round-trip");
    add_common(c_kth, true);
    CLI::App* c_idx = app.add_subcommand("index", "index characters and the index theorem");
    add_common(c_idx, true);
    c_idx->add_option("--rho", rho, "evaluation point for the quantum index");
    CLI::App* c_hom = app.add_subcommand("homogeneous", "quotient space and spectral modules");
    add_common(c_hom, true);
    CLI::App* c_fix = app.add_subcommand("fixtures", "emit a canonical fixture document");
    c_fix->add_option("name", fixture_name, "fixture name")->required();
    c_fix->add_option("--out", out, "write to this path instead of stdout");
    c_fix->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc;
    try {
        Json report;
        if (c_fix->parsed()) {
            report = fixture_document(fixture_name);
            if (!out.empty()) {
                std::ofstream os(out);
                if (!os) throw SchemaError("cannot write " + out);
                os << report.dump(2) << "\n";
                Json note;
                note["command"] = "fixtures";
                note["engine"] = kEngine;
                note["written"] = out;
                note["ok"] = true;
                report = std::move(note);
            }
            rc = emit(report, format);
        } else {
            if (max_degree < 0) throw SchemaError("--max-degree must be nonnegative");
            Json doc = load_document(file);
            if (c_verify->parsed())
                report = cmd_verify(doc);
            else if (c_coh->parsed())
                report = cmd_cohomology(doc, theory, max_degree, budget);
            else if (c_pair->parsed())
                report = cmd_pair(doc, max_degree, budget, omega, rho);
            else if (c_kth->parsed())
                report = cmd_ktheory(doc, seed);
            else if (c_idx->parsed())
                report = cmd_index(doc, std::min(max_degree, 1), budget, rho);
            else
                report = cmd_homogeneous(doc, seed);
            rc = emit(report, format);
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const EngineError& e) {
        if (e.code() == "size-budget-exceeded" || e.code() == "unknown-fixture") {
            std::cerr << e.what() << "\n";
            return 2;
        }
        Json report;
        report["engine"] = kEngine;
        report["error"] = e.code();
        report["detail"] = e.what();
        report["ok"] = false;
        emit(report, format);
        return 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return rc;
}
