// JSON serialization of presentations and fixtures.  Documents are single
// files with a "kind" discriminator; scalars serialize as arrays of
// coordinate strings "num/den", matrices as row-major nested arrays.  Note
// the file layout stores "mult" with dim^2 rows (one row per basis pair) and
// "comult" with dim rows, i.e. both transposed relative to the in-memory
// structure-constant matrices.

#pragma once

#include "fixtures.hpp"
#include "fredholm.hpp"
#include "homogeneous.hpp"

#include <json.hpp>

namespace eqcyc {

using Json = nlohmann::ordered_json;

class SchemaError : public EngineError {
public:
    explicit SchemaError(const std::string& detail) : EngineError("schema-error", detail) {}
};

inline Json scalar_to_json(const Scalar& s) {
    Json a = Json::array();
    for (const std::string& c : s.serialize()) a.push_back(c);
    return a;
}

inline Scalar scalar_from_json(const Json& j, const FieldPtr& f, const std::string& where) {
    std::vector<Rat> coords(f->degree(), Rat(0));
    auto one_coord = [&](const Json& e) -> Rat {
        if (e.is_string()) return Scalar::parse_rational(e.get<std::string>());
        if (e.is_number_integer()) return Rat(e.get<long>());
        throw SchemaError(where + ": scalar coordinates must be strings or integers");
    };
    if (j.is_array()) {
        if (static_cast<int>(j.size()) > f->degree())
            throw SchemaError(where + ": scalar has more coordinates than the field degree");
        for (size_t i = 0; i < j.size(); ++i) coords[i] = one_coord(j[i]);
    } else {
        coords[0] = one_coord(j);
    }
    return Scalar(f, std::move(coords));
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.get(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Json& j, int rows, int cols, const FieldPtr& f,
                         const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols, f);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw SchemaError(where + ": row " + std::to_string(i) + " must have " +
                              std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            Scalar v = scalar_from_json(j[i][c], f, where);
            if (!v.is_zero()) m.set(i, c, v);
        }
    }
    return m;
}

// a column vector stored as a flat array
inline Json col_to_json(const Mat& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(scalar_to_json(m.get(i, 0)));
    return a;
}

inline Mat col_from_json(const Json& j, int rows, const FieldPtr& f, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw SchemaError(where + ": expected " + std::to_string(rows) + " entries");
    Mat m(rows, 1, f);
    for (int i = 0; i < rows; ++i) {
        Scalar v = scalar_from_json(j[i], f, where);
        if (!v.is_zero()) m.set(i, 0, v);
    }
    return m;
}

inline Json field_to_json(const FieldPtr& f) {
    Json a = Json::array();
    for (const Rat& c : f->minpoly()) a.push_back(c.get_str());
    return a;
}

inline FieldPtr field_from_json(const Json& doc) {
    if (!doc.contains("field")) return Field::rationals();
    const Json& fj = doc["field"];
    if (!fj.contains("minpoly") || !fj["minpoly"].is_array())
        throw SchemaError("field.minpoly must be an array of rationals");
    std::vector<Rat> mp;
    for (const Json& e : fj["minpoly"])
        mp.push_back(e.is_string() ? Scalar::parse_rational(e.get<std::string>())
                                   : Rat(e.get<long>()));
    return Field::extension(std::move(mp));
}

// --- algebras and Hopf algebras ---------------------------------------------

inline void algebra_to_json(Json& out, const Algebra& a) {
    out["dim"] = a.dim;
    out["mult"] = mat_to_json(a.mult.transpose()); // dim^2 rows x dim
    out["unit"] = col_to_json(a.unit);
    if (!a.names.empty()) out["names"] = a.names;
}

inline Algebra algebra_from_json(const Json& j, const FieldPtr& f, const std::string& where) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SchemaError(where + ": missing integer \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim < 1) throw SchemaError(where + ": dim must be positive");
    if (!j.contains("mult") || !j.contains("unit"))
        throw SchemaError(where + ": missing \"mult\" or \"unit\"");
    Algebra a;
    a.dim = dim;
    a.field = f;
    a.mult = mat_from_json(j["mult"], dim * dim, dim, f, where + ".mult").transpose();
    a.unit = col_from_json(j["unit"], dim, f, where + ".unit");
    if (j.contains("names")) a.names = j["names"].get<std::vector<std::string>>();
    return a;
}

inline Json hopf_to_json(const Hopf& h) {
    Json out;
    out["kind"] = "hopf";
    if (!h.field()->is_rational()) out["field"] = Json{{"minpoly", field_to_json(h.field())}};
    algebra_to_json(out, h.alg);
    out["comult"] = mat_to_json(h.comult.transpose()); // dim rows x dim^2
    out["counit"] = mat_to_json(h.counit);
    out["antipode"] = mat_to_json(h.antipode);
    out["antipode_inv"] = mat_to_json(h.antipode_inv);
    return out;
}

inline Hopf hopf_from_json(const Json& j, const std::string& where) {
    FieldPtr f = field_from_json(j);
    Hopf h;
    h.alg = algebra_from_json(j, f, where);
    int n = h.alg.dim;
    for (const char* key : {"comult", "counit", "antipode"})
        if (!j.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
    h.comult = mat_from_json(j["comult"], n, n * n, f, where + ".comult").transpose();
    h.counit = mat_from_json(j["counit"], 1, n, f, where + ".counit");
    h.antipode = mat_from_json(j["antipode"], n, n, f, where + ".antipode");
    if (j.contains("antipode_inv")) {
        h.antipode_inv = mat_from_json(j["antipode_inv"], n, n, f, where + ".antipode_inv");
    } else {
        auto inv = solve(h.antipode, Mat::identity(n, f));
        if (!inv) throw SchemaError(where + ": antipode is singular and no inverse was given");
        h.antipode_inv = *inv;
    }
    return h;
}

// --- module algebras ---------------------------------------------------------

inline Json module_algebra_to_json(const Hopf& h, const ModuleAlgebra& b) {
    Json out;
    out["kind"] = "module-algebra";
    if (!h.field()->is_rational()) out["field"] = Json{{"minpoly", field_to_json(h.field())}};
    out["hopf"] = hopf_to_json(h);
    Json alg;
    algebra_to_json(alg, b.alg);
    out["algebra"] = std::move(alg);
    // action row (i, j) = coordinates of b_i <| omega_j
    int db = b.alg.dim, nh = h.dim();
    Mat rows(db * nh, db, h.field());
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < nh; ++j)
            for (int k = 0; k < db; ++k) {
                Scalar v = b.mod.act.get(k, i * nh + j);
                if (!v.is_zero()) rows.set(i * nh + j, k, v);
            }
    out["action"] = mat_to_json(rows);
    return out;
}

inline std::pair<Hopf, ModuleAlgebra> module_algebra_from_json(const Json& j) {
    if (!j.contains("hopf") || !j.contains("algebra") || !j.contains("action"))
        throw SchemaError("module-algebra: missing \"hopf\", \"algebra\" or \"action\"");
    Hopf h = hopf_from_json(j["hopf"], "hopf");
    Algebra alg = algebra_from_json(j["algebra"], h.field(), "algebra");
    int db = alg.dim, nh = h.dim();
    Mat rows = mat_from_json(j["action"], db * nh, db, h.field(), "action");
    RightModule mod;
    mod.dim = db;
    mod.hdim = nh;
    mod.field = h.field();
    mod.act = Mat(db, db * nh, h.field());
    for (int i = 0; i < db; ++i)
        for (int jj = 0; jj < nh; ++jj)
            for (int k = 0; k < db; ++k) {
                Scalar v = rows.get(i * nh + jj, k);
                if (!v.is_zero()) mod.act.set(k, i * nh + jj, v);
            }
    return {h, ModuleAlgebra{alg, mod}};
}

// --- subgroup data -----------------------------------------------------------

inline Json subgroup_to_json(const SubgroupDatum& sd) {
    Json out;
    out["kind"] = "subgroup";
    out["A"] = hopf_to_json(sd.a);
    out["A0"] = hopf_to_json(sd.a0);
    out["P"] = mat_to_json(sd.p);
    return out;
}

inline SubgroupDatum subgroup_from_json(const Json& j) {
    if (!j.contains("A") || !j.contains("A0") || !j.contains("P"))
        throw SchemaError("subgroup: missing \"A\", \"A0\" or \"P\"");
    SubgroupDatum sd;
    sd.a = hopf_from_json(j["A"], "A");
    sd.a0 = hopf_from_json(j["A0"], "A0");
    sd.p = mat_from_json(j["P"], sd.a0.dim(), sd.a.dim(), sd.a.field(), "P");
    return sd;
}

// --- Fredholm modules ----------------------------------------------------------

// Files carry the graded representation split into its two corners; the
// grading is minus-first by convention.
inline Json fredholm_to_json(const EquivariantFredholmModule& fm) {
    Json out;
    out["kind"] = "fredholm";
    out["A"] = hopf_to_json(fm.co.a);
    Json balg;
    algebra_to_json(balg, fm.co.b);
    out["B"] = std::move(balg);
    out["alpha"] = mat_to_json(fm.co.alpha);
    int d = fm.dim;
    int dminus = 0;
    for (int i = 0; i < d; ++i)
        if (fm.gamma.get(i, i) == Scalar(Rat(-1), fm.co.b.field)) ++dminus;
    int dplus = d - dminus;
    out["dim_minus"] = dminus;
    out["dim_plus"] = dplus;
    Json pim = Json::array(), pip = Json::array();
    for (int bi = 0; bi < fm.co.b.dim; ++bi) {
        Mat op = fm_pi(fm, fm.co.b.basis(bi));
        Mat mm(dminus, dminus, fm.co.b.field), pp(dplus, dplus, fm.co.b.field);
        for (int r = 0; r < dminus; ++r)
            for (int c = 0; c < dminus; ++c) mm.set(r, c, op.get(r, c));
        for (int r = 0; r < dplus; ++r)
            for (int c = 0; c < dplus; ++c) pp.set(r, c, op.get(dminus + r, dminus + c));
        pim.push_back(mat_to_json(mm));
        pip.push_back(mat_to_json(pp));
    }
    out["pi_minus"] = std::move(pim);
    out["pi_plus"] = std::move(pip);
    out["F"] = mat_to_json(fm.f);
    Json u = Json::array();
    for (int j = 0; j < fm.co.a.dim(); ++j) u.push_back(mat_to_json(fm_pi_u(fm, fm.co.a.basis(j))));
    out["U"] = std::move(u);
    return out;
}

inline EquivariantFredholmModule fredholm_from_json(const Json& j) {
    for (const char* key : {"A", "B", "alpha", "dim_minus", "dim_plus", "pi_minus", "pi_plus",
                            "F", "U"})
        if (!j.contains(key)) throw SchemaError(std::string("fredholm: missing \"") + key + "\"");
    EquivariantFredholmModule fm;
    fm.co.a = hopf_from_json(j["A"], "A");
    const FieldPtr& f = fm.co.a.field();
    fm.co.b = algebra_from_json(j["B"], f, "B");
    int na = fm.co.a.dim(), nb = fm.co.b.dim;
    fm.co.alpha = mat_from_json(j["alpha"], na * nb, nb, f, "alpha");
    int dminus = j["dim_minus"].get<int>(), dplus = j["dim_plus"].get<int>();
    if (dminus < 0 || dplus < 0 || dminus + dplus < 1)
        throw SchemaError("fredholm: grading dimensions must be nonnegative with positive sum");
    int d = fm.dim = dminus + dplus;
    if (!j["pi_minus"].is_array() || static_cast<int>(j["pi_minus"].size()) != nb ||
        !j["pi_plus"].is_array() || static_cast<int>(j["pi_plus"].size()) != nb)
        throw SchemaError("fredholm: pi_minus/pi_plus need one matrix per basis element of B");
    fm.pi = Mat(d * d, nb, f);
    for (int bi = 0; bi < nb; ++bi) {
        Mat mm = mat_from_json(j["pi_minus"][bi], dminus, dminus, f, "pi_minus");
        Mat pp = mat_from_json(j["pi_plus"][bi], dplus, dplus, f, "pi_plus");
        Mat op(d, d, f);
        for (int r = 0; r < dminus; ++r)
            for (int c = 0; c < dminus; ++c) op.set(r, c, mm.get(r, c));
        for (int r = 0; r < dplus; ++r)
            for (int c = 0; c < dplus; ++c) op.set(dminus + r, dminus + c, pp.get(r, c));
        Mat v = detail::vec_op(op);
        for (int i = 0; i < d * d; ++i)
            if (!v.get(i, 0).is_zero()) fm.pi.set(i, bi, v.get(i, 0));
    }
    fm.f = mat_from_json(j["F"], d, d, f, "F");
    fm.gamma = Mat(d, d, f);
    for (int i = 0; i < d; ++i)
        fm.gamma.set(i, i, i < dminus ? Scalar(Rat(-1), f) : Scalar::one(f));
    if (!j["U"].is_array() || static_cast<int>(j["U"].size()) != na)
        throw SchemaError("fredholm: U needs one matrix per basis element of A");
    fm.pi_u = Mat(d * d, na, f);
    for (int ai = 0; ai < na; ++ai) {
        Mat v = detail::vec_op(mat_from_json(j["U"][ai], d, d, f, "U"));
        for (int i = 0; i < d * d; ++i)
            if (!v.get(i, 0).is_zero()) fm.pi_u.set(i, ai, v.get(i, 0));
    }
    return fm;
}

} // namespace eqcyc
