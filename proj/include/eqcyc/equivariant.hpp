// Equivariant cyclic cochain complexes.  Cochains in degree n are
// functionals on H (x) B^{(x)(n+1)}, stored as coordinate vectors in the
// dual basis.  The complex lives on the subspace of invariant functionals
// (inclusion matrices kept explicitly); every structure map is built as a
// predual map on the tensor space, transposed, and compressed onto the
// invariant basis with the preservation of invariance verified, not
// assumed.  The same machinery covers the non-equivariant complex (H = C),
// the twisted complex on theta-invariant functionals, the evaluation
// morphisms omega_* / rho_*, and the Morita maps Psi / Phi_p with their
// explicit homotopy.

#pragma once

#include "actions.hpp"
#include "cocyclic.hpp"

namespace eqcyc {

struct EquivariantComplex {
    Hopf hopf;
    ModuleAlgebra base;
    Mat theta;                            // nonempty only for twisted complexes
    CocyclicObject obj;                   // structure maps in the invariant basis
    std::vector<Mat> incl;                // ambient_n x dims[n] inclusion per level
    std::vector<std::vector<int>> free_rows; // rows of incl carrying the identity
    std::vector<int> ambient;             // ambient dimension per level
};

// Compress an ambient-space cochain operator a (ambient_dst x ambient_src)
// onto the invariant bases: the unique m with dst_incl * m = a * src_incl.
// Because dst_incl is pivot-normalized, m is read off the free rows; the
// residual check is the proof that a preserves invariance.
inline Mat compress_onto(const Mat& a, const Mat& src_incl, const Mat& dst_incl,
                         const std::vector<int>& dst_free) {
    Mat w = a * src_incl;
    Mat m(dst_incl.cols(), src_incl.cols(), a.field());
    for (size_t i = 0; i < dst_free.size(); ++i) m.set_row(static_cast<int>(i), w.row(dst_free[i]));
    if (!(dst_incl * m == w))
        throw EngineError("internal", "operator does not preserve the invariant subspace");
    return m;
}

inline int checked_ambient(int hdim, int bdim, int n, long long budget, int degree) {
    long long amb = hdim;
    for (int i = 0; i <= n; ++i) {
        amb *= bdim;
        if (amb > budget)
            throw EngineError("size-budget-exceeded",
                              "ambient dimension " + std::to_string(amb) + " at degree " +
                                  std::to_string(degree) + " exceeds budget " +
                                  std::to_string(budget));
    }
    return static_cast<int>(amb);
}

// ---------------------------------------------------------------------------
// Predual maps on H (x) B^{(x)(n+1)}.  The cochain-level structure maps are
// their transposes.

// (t_n f)(w (x) b0 (x) ... (x) bn) = f(w_(0) (x) bn <| w_(1) (x) b0 (x) ... (x) b_{n-1})
inline Mat t_predual(const Hopf& h, const ModuleAlgebra& b, int n) {
    int nh = h.dim(), db = b.alg.dim;
    const FieldPtr& f = h.field();
    int bp = 1;
    for (int i = 0; i < n; ++i) bp *= db; // db^n
    int bn1 = bp * db;
    // w (x) bvec -> w0 (x) w1 (x) bvec
    Mat a1 = kron(h.comult, Mat::identity(bn1, f));
    // -> w0 (x) b0 ... bn (x) w1
    std::vector<int> dims{nh, nh};
    for (int i = 0; i <= n; ++i) dims.push_back(db);
    std::vector<int> perm{0};
    for (int i = 0; i <= n; ++i) perm.push_back(2 + i);
    perm.push_back(1);
    Mat a2 = tensor_permutation(dims, perm, f);
    // -> w0 (x) b0 ... b_{n-1} (x) (bn <| w1)
    Mat a3 = kron(Mat::identity(nh * bp, f), b.mod.act);
    // -> w0 (x) (bn <| w1) (x) b0 ... b_{n-1}
    std::vector<int> dims2{nh};
    for (int i = 0; i <= n; ++i) dims2.push_back(db);
    std::vector<int> perm2{0, n + 1};
    for (int i = 1; i <= n; ++i) perm2.push_back(i);
    Mat a4 = tensor_permutation(dims2, perm2, f);
    return a4 * a3 * a2 * a1;
}

// (d^n_i f)(w (x) b0 ... bn) = f(w (x) b0 ... (b_i b_{i+1}) ... bn), 0 <= i < n.
inline Mat d_predual(const Hopf& h, const ModuleAlgebra& b, int n, int i) {
    int nh = h.dim(), db = b.alg.dim;
    const FieldPtr& f = h.field();
    int left = nh, right = 1;
    for (int k = 0; k < i; ++k) left *= db;
    for (int k = i + 2; k <= n; ++k) right *= db;
    return kron(Mat::identity(left, f), kron(b.alg.mult, Mat::identity(right, f)));
}

// (s^n_i f)(w (x) b0 ... bn) = f(w (x) b0 ... b_i (x) 1 (x) b_{i+1} ... bn).
inline Mat s_predual(const Hopf& h, const ModuleAlgebra& b, int n, int i) {
    int nh = h.dim(), db = b.alg.dim;
    const FieldPtr& f = h.field();
    int left = nh, right = 1;
    for (int k = 0; k <= i; ++k) left *= db;
    for (int k = i + 1; k <= n; ++k) right *= db;
    return kron(Mat::identity(left, f), kron(b.alg.unit, Mat::identity(right, f)));
}

// w (x) x -> w_(0) (x) (x <| w_(1)) on H (x) B^{(x)(n+1)}.  Every invariant
// functional is fixed by the transpose of this map; it is the device behind
// t^{n+1} = id.
inline Mat invariance_predual(const Hopf& h, const ModuleAlgebra& b, int n) {
    int nh = h.dim(), db = b.alg.dim;
    const FieldPtr& f = h.field();
    RightModule pw = tensor_power_module(h, b.mod, n + 1);
    Mat a1 = kron(h.comult, Mat::identity(pw.dim, f));
    Mat a2 = tensor_permutation({nh, nh, pw.dim}, {0, 2, 1}, f);
    (void)db;
    return kron(Mat::identity(nh, f), pw.act) * a2 * a1;
}

// ---------------------------------------------------------------------------
// Builders

inline EquivariantComplex build_equivariant(const ModuleAlgebra& b, const Hopf& h, int n_max,
                                            long long budget = 200000) {
    EquivariantComplex e;
    e.hopf = h;
    e.base = b;
    const FieldPtr& f = h.field();
    int nh = h.dim(), db = b.alg.dim;
    e.obj.field = f;
    e.obj.dims.resize(n_max + 1);
    e.obj.t.resize(n_max + 1);
    e.obj.d.resize(n_max + 1);
    e.obj.s.resize(n_max + 1);
    e.incl.resize(n_max + 1);
    e.free_rows.resize(n_max + 1);
    e.ambient.resize(n_max + 1);

    RightModule conj = adjoint_module(h, true);
    RightModule pw; // B^{(x)(n+1)} as a module, grown level by level
    for (int n = 0; n <= n_max; ++n) {
        pw = (n == 0) ? b.mod : tensor_module(h, pw, b.mod);
        int amb = checked_ambient(nh, db, n, budget, n);
        e.ambient[n] = amb;
        RightModule mod = tensor_module(h, conj, pw);
        // invariant functionals: act_by(e_j)^T f = eps(e_j) f for all j
        Mat stacked(0, amb, f);
        for (int j = 0; j < nh; ++j) {
            Scalar ej = (h.counit * h.basis(j)).get(0, 0);
            Mat cond = mod.act_by(h.basis(j)).transpose() - ej * Mat::identity(amb, f);
            stacked = stacked.rows() == 0 ? cond : vstack(stacked, cond);
        }
        e.incl[n] = kernel_basis(stacked, &e.free_rows[n]);
        e.obj.dims[n] = e.incl[n].cols();
    }
    for (int n = 0; n <= n_max; ++n) {
        e.obj.t[n] =
            compress_onto(t_predual(h, b, n).transpose(), e.incl[n], e.incl[n], e.free_rows[n]);
        if (n >= 1) {
            e.obj.d[n].resize(n + 1);
            for (int i = 0; i < n; ++i)
                e.obj.d[n][i] = compress_onto(d_predual(h, b, n, i).transpose(), e.incl[n - 1],
                                              e.incl[n], e.free_rows[n]);
            e.obj.d[n][n] = e.obj.t[n] * e.obj.d[n][0];
        }
        if (n < n_max) {
            e.obj.s[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                e.obj.s[n][i] = compress_onto(s_predual(h, b, n, i).transpose(), e.incl[n + 1],
                                              e.incl[n], e.free_rows[n]);
        }
    }
    return e;
}

inline Hopf trivial_hopf(const FieldPtr& f = Field::rationals()) {
    Hopf h;
    h.alg = scalar_algebra(f);
    h.comult = Mat::identity(1, f);
    h.counit = Mat::identity(1, f);
    h.antipode = Mat::identity(1, f);
    h.antipode_inv = Mat::identity(1, f);
    return h;
}

// Classical (non-equivariant) cyclic cochain complex of an algebra: the
// equivariant construction over the one-dimensional Hopf algebra.
inline EquivariantComplex build_nonequivariant(const Algebra& a, int n_max,
                                               long long budget = 200000) {
    Hopf h = trivial_hopf(a.field);
    ModuleAlgebra b;
    b.alg = a;
    b.mod = trivial_module(h, a.dim);
    return build_equivariant(b, h, n_max, budget);
}

// Twisted complex: functionals on B^{(x)(n+1)} fixed by theta^{(x)(n+1)},
// with (t_n f)(b0 (x) ... (x) bn) = f(theta(bn) (x) b0 (x) ... (x) b_{n-1}).
// On the theta-invariant subspace t^{n+1} = id holds literally.
inline EquivariantComplex build_twisted(const Algebra& a, const Mat& theta, int n_max,
                                        long long budget = 200000) {
    const FieldPtr& f = a.field;
    int db = a.dim;
    if (theta.rows() != db || theta.cols() != db || rank(theta) != db ||
        !(theta * a.mult == a.mult * kron(theta, theta)) || !(theta * a.unit == a.unit))
        throw EngineError("twist-not-automorphism", "theta is not an algebra automorphism");

    EquivariantComplex e;
    e.hopf = trivial_hopf(f);
    e.base.alg = a;
    e.base.mod = trivial_module(e.hopf, db);
    e.theta = theta;
    e.obj.field = f;
    e.obj.dims.resize(n_max + 1);
    e.obj.t.resize(n_max + 1);
    e.obj.d.resize(n_max + 1);
    e.obj.s.resize(n_max + 1);
    e.incl.resize(n_max + 1);
    e.free_rows.resize(n_max + 1);
    e.ambient.resize(n_max + 1);

    std::vector<Mat> tpow(n_max + 1); // theta^{(x)(n+1)}
    for (int n = 0; n <= n_max; ++n) {
        int amb = checked_ambient(1, db, n, budget, n);
        e.ambient[n] = amb;
        tpow[n] = (n == 0) ? theta : kron(tpow[n - 1], theta);
        Mat cond = tpow[n].transpose() - Mat::identity(amb, f);
        e.incl[n] = kernel_basis(cond, &e.free_rows[n]);
        e.obj.dims[n] = e.incl[n].cols();
    }
    auto twisted_t_predual = [&](int n) {
        int bp = e.ambient[n] / db; // db^n
        std::vector<int> dims(n + 1, db);
        std::vector<int> perm{n};
        for (int i = 0; i < n; ++i) perm.push_back(i);
        return tensor_permutation(dims, perm, f) * kron(Mat::identity(bp, f), theta);
    };
    Hopf th = e.hopf;
    for (int n = 0; n <= n_max; ++n) {
        e.obj.t[n] =
            compress_onto(twisted_t_predual(n).transpose(), e.incl[n], e.incl[n], e.free_rows[n]);
        if (n >= 1) {
            e.obj.d[n].resize(n + 1);
            for (int i = 0; i < n; ++i)
                e.obj.d[n][i] = compress_onto(d_predual(th, e.base, n, i).transpose(),
                                              e.incl[n - 1], e.incl[n], e.free_rows[n]);
            e.obj.d[n][n] = e.obj.t[n] * e.obj.d[n][0];
        }
        if (n < n_max) {
            e.obj.s[n].resize(n + 1);
            for (int i = 0; i <= n; ++i)
                e.obj.s[n][i] = compress_onto(s_predual(th, e.base, n, i).transpose(),
                                              e.incl[n + 1], e.incl[n], e.free_rows[n]);
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation morphisms

// Degree-n matrix of f -> f(omega (x) w(.) (x) ... (x) w(.)): evaluation of
// equivariant cochains at omega, restricted along an algebra inclusion
// w : target algebra -> B.  For w the inclusion of B^H the target is the
// non-equivariant complex of the invariant subalgebra; for w = id and
// omega a group-like rho it is the theta_rho-twisted complex (rho_star).
inline Mat omega_star(const EquivariantComplex& e, const EquivariantComplex& target, const Mat& w,
                      const Mat& omega, int n) {
    const FieldPtr& f = e.obj.field;
    Mat wpow = w;
    for (int i = 1; i <= n; ++i) wpow = kron(wpow, w);
    Mat predual = kron(omega, wpow); // target ambient -> source ambient
    (void)f;
    return compress_onto(predual.transpose(), e.incl[n], target.incl[n], target.free_rows[n]);
}

inline Mat rho_star(const EquivariantComplex& e, const EquivariantComplex& twisted, const Mat& rho,
                    int n) {
    return omega_star(e, twisted, Mat::identity(e.base.alg.dim, e.obj.field), rho, n);
}

// ---------------------------------------------------------------------------
// Morita maps

// End(X) (x) B as a module algebra (matrix units E_pq at index p*dim(X)+q).
inline ModuleAlgebra end_tensor_algebra(const Hopf& h, const RightModule& x,
                                        const ModuleAlgebra& b) {
    ModuleAlgebra out;
    out.alg = tensor_algebra(matrix_algebra(x.dim, b.alg.field), b.alg);
    out.mod = endx_tensor_b(h, x, b.mod);
    return out;
}

// Predual of Psi^n on the ambient tensor spaces: the map
// H (x) (End(X)(x)B)^{(x)(n+1)} -> H (x) B^{(x)(n+1)} with
//   w (x) (T0 (x) b0) (x) ... -> w_(0) (x) b0 (x) ... (x) bn
//                                 . Tr(pi_X S^{-1}(w_(1)) T0 ... Tn),
// so that the cochain-level Psi^n is its transpose.
inline Mat psi_predual(const Hopf& h, const RightModule& x, int db, int n) {
    const FieldPtr& f = h.field();
    int nh = h.dim(), nx = x.dim;
    int e1 = nx * nx * db;
    long long pw = 1, bw = 1;
    for (int i = 0; i <= n; ++i) {
        pw *= e1;
        bw *= db;
    }
    int src = static_cast<int>(nh * pw), dst = static_cast<int>(nh * bw);

    std::vector<Mat> sinv_act(nh); // pi_X(S^{-1}(e_c)) in the act_by convention
    for (int c = 0; c < nh; ++c) sinv_act[c] = x.act_by(h.antipode_inv * h.basis(c));

    Mat pred(dst, src, f); // tensors of End(X)(x)B level n -> tensors of B level n
    for (int a = 0; a < nh; ++a) {
        Mat delta = h.comult * h.basis(a); // nh^2 x 1
        for (long long m = 0; m < pw; ++m) {
            // decode slots (p_i, q_i, beta_i), most-significant slot first
            long long rem = m;
            std::vector<int> p(n + 1), q(n + 1), beta(n + 1);
            for (int i = n; i >= 0; --i) {
                int s = static_cast<int>(rem % e1);
                rem /= e1;
                beta[i] = s % db;
                q[i] = (s / db) % nx;
                p[i] = s / (db * nx);
            }
            bool chain = true;
            for (int i = 0; i < n && chain; ++i) chain = (q[i] == p[i + 1]);
            if (!chain) continue;
            int col = static_cast<int>(a * pw + m);
            int brow = 0;
            for (int i = 0; i <= n; ++i) brow = brow * db + beta[i];
            for (int idx = 0; idx < nh * nh; ++idx) {
                Scalar c = delta.get(idx, 0);
                if (c.is_zero()) continue;
                Scalar tr = sinv_act[idx % nh].get(q[n], p[0]);
                if (tr.is_zero()) continue;
                int row = (idx / nh) * (dst / nh) + brow;
                pred.set(row, col, pred.get(row, col) + c * tr);
            }
        }
    }
    return pred;
}

// Degree-n matrix of Psi^n in the invariant bases; output invariance is
// verified by the compression.
inline Mat psi(const EquivariantComplex& eb, const EquivariantComplex& exb, const RightModule& x,
               int n) {
    Mat pred = psi_predual(eb.hopf, x, eb.base.alg.dim, n);
    return compress_onto(pred.transpose(), eb.incl[n], exb.incl[n], exb.free_rows[n]);
}

// Degree-n pullback along Phi_p : B -> End(X) (x) B, b -> p (x) b, for an
// idempotent p commuting with the action and absorbing it to the counit.
inline Mat phi_p(const EquivariantComplex& exb, const EquivariantComplex& eb, const RightModule& x,
                 const Mat& p, int n) {
    const Hopf& h = eb.hopf;
    const FieldPtr& f = h.field();
    int nh = h.dim(), nx = x.dim, db = eb.base.alg.dim;
    if (p.rows() != nx || p.cols() != nx || !(p * p == p))
        throw EngineError("p-not-central-invariant", "p is not an idempotent in End(X)");
    for (int j = 0; j < nh; ++j) {
        Scalar ej = (h.counit * h.basis(j)).get(0, 0);
        Mat pij = x.act_by(h.basis(j));
        if (!(pij * p == ej * p) || !(p * pij == ej * p))
            throw EngineError("p-not-central-invariant",
                              "p does not centralize and absorb the action on X");
    }
    Mat vec_p(nx * nx, 1, f); // row-major coordinates of p in the E_pq basis
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) vec_p.set(i * nx + j, 0, p.get(i, j));
    Mat step = kron(vec_p, Mat::identity(db, f)); // B -> End(X) (x) B
    Mat pow = step;
    for (int i = 1; i <= n; ++i) pow = kron(pow, step);
    Mat predual = kron(Mat::identity(nh, f), pow); // V^B_n -> V^{End(X)(x)B}_n
    return compress_onto(predual.transpose(), exb.incl[n], eb.incl[n], eb.free_rows[n]);
}

// The homotopy h^n : C^{n+1} -> C^n on the complex of End(X) (x) B with the
// fixed matrix units and p = E_00,
//   h^n = sum_j (-1)^j h^n_j,
//   (h^n_j f)(w (x) (T0 (x) b0) (x) ... (x) (Tn (x) bn)) =
//     sum (T0)_{k0 k1} ... (Tj)_{kj k_{j+1}}
//       f(w (x) (E_{k0,0} (x) b0) (x) (E_00 (x) b1) (x) ... (x) (E_00 (x) bj)
//           (x) (E_{0,k_{j+1}} (x) 1) (x) (T_{j+1} (x) b_{j+1}) (x) ...).
// Satisfies b h^n + h^{n-1} b = id - Psi^n Phi^n_p on C^n (verified in tests).
inline Mat morita_homotopy(const EquivariantComplex& exb, const RightModule& x,
                           const ModuleAlgebra& b, int n) {
    if (n < 0 || n + 1 > exb.obj.n_max())
        throw EngineError("degree-out-of-range", "homotopy needs levels up to n+1");
    const FieldPtr& f = exb.obj.field;
    int nh = exb.hopf.dim(), nx = x.dim, db = b.alg.dim;
    int e1 = nx * nx * db;
    int src = exb.ambient[n], dst = exb.ambient[n + 1];
    long long pw = 1;
    for (int i = 0; i <= n; ++i) pw *= e1;
    const Mat& unit = b.alg.unit;

    Mat pred(dst, src, f); // level-n tensors -> level-(n+1) tensors
    for (int a = 0; a < nh; ++a) {
        for (long long m = 0; m < pw; ++m) {
            long long rem = m;
            std::vector<int> p(n + 1), q(n + 1), beta(n + 1);
            for (int i = n; i >= 0; --i) {
                int s = static_cast<int>(rem % e1);
                rem /= e1;
                beta[i] = s % db;
                q[i] = (s / db) % nx;
                p[i] = s / (db * nx);
            }
            int col = static_cast<int>(a * pw + m);
            for (int j = 0; j <= n; ++j) {
                bool chain = true;
                for (int i = 0; i < j && chain; ++i) chain = (q[i] == p[i + 1]);
                if (!chain) break; // longer j only add constraints
                // output slots (n+2 of them)
                std::vector<int> slot(n + 2);
                slot[0] = (p[0] * nx + 0) * db + beta[0];
                for (int i = 1; i <= j; ++i) slot[i] = (0 * nx + 0) * db + beta[i];
                // slot j+1 gets E_{0, q_j} (x) 1_B, expanded over the unit below
                for (int i = j + 1; i <= n; ++i)
                    slot[i + 1] = (p[i] * nx + q[i]) * db + beta[i];
                for (int ub = 0; ub < db; ++ub) {
                    Scalar uv = unit.get(ub, 0);
                    if (uv.is_zero()) continue;
                    slot[j + 1] = (0 * nx + q[j]) * db + ub;
                    long long row = a;
                    for (int i = 0; i < n + 2; ++i) row = row * e1 + slot[i];
                    Scalar val = (j % 2 == 0) ? uv : -uv;
                    pred.set(static_cast<int>(row), col,
                             pred.get(static_cast<int>(row), col) + val);
                }
            }
        }
    }
    return compress_onto(pred.transpose(), exb.incl[n + 1], exb.incl[n], exb.free_rows[n]);
}

// Pullback along the inner automorphism Ad(u) : c -> u c u^{-1} of B for an
// invertible H-invariant u; a cochain endomorphism inducing the identity on
// cyclic cohomology.
inline Mat ad_pullback(const EquivariantComplex& e, const Mat& u, int n) {
    const Algebra& a = e.base.alg;
    const FieldPtr& f = a.field;
    auto inv = solve(a.lmul(u), a.unit);
    if (!inv) throw EngineError("not-invertible", "Ad needs an invertible element");
    Mat ad = a.lmul(u) * a.rmul(*inv);
    Mat pow = ad;
    for (int i = 1; i <= n; ++i) pow = kron(pow, ad);
    Mat predual = kron(Mat::identity(e.hopf.dim(), f), pow);
    return compress_onto(predual.transpose(), e.incl[n], e.incl[n], e.free_rows[n]);
}

} // namespace eqcyc
