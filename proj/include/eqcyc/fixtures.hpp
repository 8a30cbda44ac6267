// The shipped example suite: group and function Hopf algebras of small
// groups, the four-dimensional Taft algebra (Sweedler's example), and the
// standard module-algebra pairings built from them.

#pragma once

#include "actions.hpp"

namespace eqcyc {
namespace fixtures {

// --- finite groups as tables -----------------------------------------------

inline std::vector<std::vector<int>> z2_table() { return {{0, 1}, {1, 0}}; }

// S3 as permutations of {0,1,2} in lexicographic order; identity first.
inline std::vector<std::array<int, 3>> s3_perms() {
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

inline std::vector<std::vector<int>> s3_table() {
    auto perms = s3_perms();
    auto index_of = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw EngineError("internal", "permutation not found");
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            // composition acting on points: (p_i p_j)(x) = p_i(p_j(x))
            std::array<int, 3> c;
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(c);
        }
    return t;
}

inline int group_inverse(const std::vector<std::vector<int>>& table, int g) {
    for (size_t h = 0; h < table.size(); ++h)
        if (table[g][h] == 0) return static_cast<int>(h);
    throw EngineError("internal", "group element has no inverse");
}

// --- Hopf structures --------------------------------------------------------

// Group algebra k[G]: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
inline Hopf hopf_group_algebra(const std::vector<std::vector<int>>& table,
                               const std::vector<std::string>& names = {},
                               const FieldPtr& f = Field::rationals()) {
    Hopf h;
    h.alg = group_algebra(table, names, f);
    int n = h.alg.dim;
    h.comult = Mat(n * n, n, f);
    h.counit = Mat(1, n, f);
    h.antipode = Mat(n, n, f);
    for (int g = 0; g < n; ++g) {
        h.comult.set(g * n + g, g, Scalar::one(f));
        h.counit.set(0, g, Scalar::one(f));
        h.antipode.set(group_inverse(table, g), g, Scalar::one(f));
    }
    h.antipode_inv = h.antipode;
    return h;
}

// Function algebra k(G): pointwise product, Delta(d_g) = sum_{hk=g} d_h (x) d_k,
// eps(d_g) = [g = e], S(d_g) = d_{g^{-1}}.
inline Hopf hopf_function_algebra(const std::vector<std::vector<int>>& table,
                                  const std::vector<std::string>& names = {},
                                  const FieldPtr& f = Field::rationals()) {
    Hopf h;
    h.alg = function_algebra(static_cast<int>(table.size()), names, f);
    int n = h.alg.dim;
    h.comult = Mat(n * n, n, f);
    h.counit = Mat(1, n, f);
    h.antipode = Mat(n, n, f);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            h.comult.set(a * n + b, table[a][b], Scalar::one(f));
    h.counit.set(0, 0, Scalar::one(f));
    for (int g = 0; g < n; ++g)
        h.antipode.set(group_inverse(table, g), g, Scalar::one(f));
    h.antipode_inv = h.antipode;
    return h;
}

// The 4-dimensional Taft algebra: basis 1, g, x, gx with g^2 = 1, x^2 = 0,
// xg = -gx; Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x; S(x) = -gx, S^2 = Ad g.
inline Hopf sweedler_h4(const FieldPtr& f = Field::rationals()) {
    Hopf h;
    h.alg.dim = 4;
    h.alg.field = f;
    h.alg.names = {"1", "g", "x", "gx"};
    h.alg.mult = Mat(4, 16, f);
    auto put = [&](int i, int j, int k, int s) {
        h.alg.mult.set(k, i * 4 + j, Scalar(Rat(s), f));
    };
    // products written out explicitly
    put(0, 0, 0, 1); put(0, 1, 1, 1); put(0, 2, 2, 1); put(0, 3, 3, 1);
    put(1, 0, 1, 1); put(1, 1, 0, 1); put(1, 2, 3, 1); put(1, 3, 2, 1);
    put(2, 0, 2, 1); put(2, 1, 3, -1); // x g = -gx
    put(3, 0, 3, 1); put(3, 1, 2, -1); // gx g = -x
    h.alg.unit = Mat::unit_column(4, 0, f);
    h.comult = Mat(16, 4, f);
    Scalar one = Scalar::one(f);
    h.comult.set(0 * 4 + 0, 0, one);                      // 1 -> 1(x)1
    h.comult.set(1 * 4 + 1, 1, one);                      // g -> g(x)g
    h.comult.set(2 * 4 + 0, 2, one);                      // x -> x(x)1 + g(x)x
    h.comult.set(1 * 4 + 2, 2, one);
    h.comult.set(3 * 4 + 1, 3, one);                      // gx -> gx(x)g + 1(x)gx
    h.comult.set(0 * 4 + 3, 3, one);
    h.counit = Mat(1, 4, f);
    h.counit.set(0, 0, one);
    h.counit.set(0, 1, one);
    h.antipode = Mat(4, 4, f);
    h.antipode.set(0, 0, one);
    h.antipode.set(1, 1, one);
    h.antipode.set(3, 2, -one); // S(x) = -gx
    h.antipode.set(2, 3, one);  // S(gx) = x
    h.antipode_inv = Mat(4, 4, f);
    h.antipode_inv.set(0, 0, one);
    h.antipode_inv.set(1, 1, one);
    h.antipode_inv.set(3, 2, one);  // S^{-1}(x) = gx
    h.antipode_inv.set(2, 3, -one); // S^{-1}(gx) = -x
    return h;
}

// --- module-algebra fixtures -------------------------------------------------

struct HopfModuleAlgebra {
    Hopf hopf;
    ModuleAlgebra base;
};

// F1: trivial Hopf algebra acting on the ground field.
inline HopfModuleAlgebra f1(const FieldPtr& f = Field::rationals()) {
    HopfModuleAlgebra out;
    out.hopf.alg = scalar_algebra(f);
    out.hopf.comult = Mat::identity(1, f);
    out.hopf.counit = Mat::identity(1, f);
    out.hopf.antipode = Mat::identity(1, f);
    out.hopf.antipode_inv = Mat::identity(1, f);
    out.base.alg = scalar_algebra(f);
    out.base.mod = trivial_module(out.hopf, 1);
    return out;
}

// F2: k[Z/2] acting on k(Z/2) by the coordinate swap.
inline HopfModuleAlgebra f2(const FieldPtr& f = Field::rationals()) {
    HopfModuleAlgebra out;
    out.hopf = hopf_group_algebra(z2_table(), {"e", "g"}, f);
    out.base.alg = function_algebra(2, {"d0", "d1"}, f);
    RightModule m;
    m.dim = 2;
    m.hdim = 2;
    m.field = f;
    m.act = Mat(2, 4, f);
    Scalar one = Scalar::one(f);
    // d_i <| e = d_i, d_i <| g = d_{1-i}
    m.act.set(0, 0 * 2 + 0, one);
    m.act.set(1, 0 * 2 + 1, one);
    m.act.set(1, 1 * 2 + 0, one);
    m.act.set(0, 1 * 2 + 1, one);
    out.base.mod = m;
    return out;
}

// F3: the Taft algebra acting on itself by b <| omega = S(omega_(0)) b omega_(1).
inline HopfModuleAlgebra f3(const FieldPtr& f = Field::rationals()) {
    HopfModuleAlgebra out;
    out.hopf = sweedler_h4(f);
    out.base.alg = out.hopf.alg;
    out.base.mod = adjoint_module(out.hopf, /*use_antipode_inverse=*/false);
    return out;
}

} // namespace fixtures
} // namespace eqcyc
