// Equivariant K-theory representatives (invariant idempotents and
// invertibles in End(X) (x) B), the similarity machinery, the pairings of
// cyclic cocycles with K-classes into the space R(H) of invariant
// functionals on H, the twisted pairing, and the crossed-product
// correspondence for semisimple H.

#pragma once

#include "equivariant.hpp"
#include "wedderburn.hpp"

#include <random>

namespace eqcyc {

// ---------------------------------------------------------------------------
// Representatives

struct InvariantIdempotent {
    RightModule x; // the H-module X
    Mat elem;      // coordinates in End(X) (x) B, index (i*dim(X)+j)*dim(B)+beta
};

struct InvariantInvertible {
    RightModule x;
    Mat elem;
    Mat inverse;
};

// R(H) membership: f(S^{-1}(w_(0)) eta w_(1)) = eps(w) f(eta) for all w.
inline bool in_r_h(const Hopf& h, const Mat& f) {
    RightModule conj = adjoint_module(h, true);
    for (int j = 0; j < h.dim(); ++j) {
        Scalar ej = (h.counit * h.basis(j)).get(0, 0);
        if (!(conj.act_by(h.basis(j)).transpose() * f == ej * f)) return false;
    }
    return true;
}

inline InvariantIdempotent check_idempotent(const Hopf& h, const RightModule& x,
                                            const ModuleAlgebra& b, const Mat& p) {
    ModuleAlgebra a = end_tensor_algebra(h, x, b);
    Mat sq = a.alg.product(p, p);
    if (!(sq == p)) {
        Mat diff = sq - p;
        for (int i = 0; i < diff.rows(); ++i)
            if (!diff.get(i, 0).is_zero())
                throw EngineError("not-idempotent", "p^2 - p has nonzero coordinate " +
                                                        std::to_string(i) + " = " +
                                                        diff.get(i, 0).to_string());
    }
    for (int j = 0; j < h.dim(); ++j) {
        Scalar ej = (h.counit * h.basis(j)).get(0, 0);
        if (!(a.mod.act_by(h.basis(j)) * p == ej * p))
            throw EngineError("not-invariant",
                              "p moves under the action of basis element " + std::to_string(j));
    }
    return {x, p};
}

inline InvariantInvertible check_invertible(const Hopf& h, const RightModule& x,
                                            const ModuleAlgebra& b, const Mat& u) {
    ModuleAlgebra a = end_tensor_algebra(h, x, b);
    auto inv = solve(a.alg.lmul(u), a.alg.unit);
    if (!inv || !(a.alg.product(*inv, u) == a.alg.unit))
        throw EngineError("not-invertible", "u has no two-sided inverse");
    for (int j = 0; j < h.dim(); ++j) {
        Scalar ej = (h.counit * h.basis(j)).get(0, 0);
        if (!(a.mod.act_by(h.basis(j)) * u == ej * u))
            throw EngineError("not-invariant",
                              "u moves under the action of basis element " + std::to_string(j));
    }
    return {x, u, *inv};
}

// ---------------------------------------------------------------------------
// Direct sums and corner embeddings

inline RightModule direct_sum_module(const Hopf& h, const RightModule& a, const RightModule& b) {
    int nh = h.dim(), da = a.dim, db = b.dim, d = da + db;
    RightModule m;
    m.dim = d;
    m.hdim = nh;
    m.field = h.field();
    m.act = Mat(d, d * nh, h.field());
    for (int r = 0; r < da; ++r)
        for (int c = 0; c < da; ++c)
            for (int j = 0; j < nh; ++j) {
                Scalar v = a.act.get(r, c * nh + j);
                if (!v.is_zero()) m.act.set(r, c * nh + j, v);
            }
    for (int r = 0; r < db; ++r)
        for (int c = 0; c < db; ++c)
            for (int j = 0; j < nh; ++j) {
                Scalar v = b.act.get(r, c * nh + j);
                if (!v.is_zero()) m.act.set(da + r, (da + c) * nh + j, v);
            }
    return m;
}

// Embed t in Hom(X_src, X_dst) (x) B -- coordinates (i*d_src+j)*db+beta --
// into End(Z) (x) B for Z of dimension nz, placing the block at the given
// row/column offsets.
inline Mat hom_corner(const Mat& t, int d_dst, int d_src, int off_dst, int off_src, int nz,
                      int db) {
    Mat out(nz * nz * db, 1, t.field());
    for (int i = 0; i < d_dst; ++i)
        for (int j = 0; j < d_src; ++j)
            for (int beta = 0; beta < db; ++beta) {
                Scalar v = t.get((i * d_src + j) * db + beta, 0);
                if (!v.is_zero())
                    out.set(((off_dst + i) * nz + off_src + j) * db + beta, 0, v);
            }
    return out;
}

// p (+) 0 in End(X (+) X') (x) B.
inline InvariantIdempotent oplus_zero(const Hopf& h, const ModuleAlgebra& b,
                                      const InvariantIdempotent& p, const RightModule& xprime) {
    RightModule z = direct_sum_module(h, p.x, xprime);
    Mat elem = hom_corner(p.elem, p.x.dim, p.x.dim, 0, 0, z.dim, b.alg.dim);
    return check_idempotent(h, z, b, elem);
}

// u (+) 1 in End(X (+) X') (x) B.
inline InvariantInvertible oplus_one(const Hopf& h, const ModuleAlgebra& b,
                                     const InvariantInvertible& u, const RightModule& xprime) {
    RightModule z = direct_sum_module(h, u.x, xprime);
    int nz = z.dim, db = b.alg.dim;
    Mat one_corner(nz * nz * db, 1, b.alg.field);
    for (int i = u.x.dim; i < nz; ++i)
        for (int beta = 0; beta < db; ++beta) {
            Scalar v = b.alg.unit.get(beta, 0);
            if (!v.is_zero()) one_corner.set((i * nz + i) * db + beta, 0, v);
        }
    Mat elem = hom_corner(u.elem, u.x.dim, u.x.dim, 0, 0, nz, db) + one_corner;
    return check_invertible(h, z, b, elem);
}

// The explicit similarity between equivalent idempotents: given invariant
// gamma in Hom(X, X') (x) B and gamma' in Hom(X', X) (x) B with
// gamma gamma' = p' and gamma' gamma = p,
//   gamma_0 = [[1 - p, p gamma' p'], [p' gamma p, 1 - p']]
// is an invariant self-inverse element of End(X (+) X') (x) B conjugating
// p (+) 0 to 0 (+) p'.
inline InvariantInvertible gamma0(const Hopf& h, const ModuleAlgebra& b,
                                  const InvariantIdempotent& p, const InvariantIdempotent& pp,
                                  const Mat& gamma, const Mat& gamma_prime) {
    int dx = p.x.dim, dxp = pp.x.dim, db = b.alg.dim;
    RightModule z = direct_sum_module(h, p.x, pp.x);
    int nz = z.dim;
    ModuleAlgebra a = end_tensor_algebra(h, z, b);
    Mat ph = hom_corner(p.elem, dx, dx, 0, 0, nz, db);
    Mat pph = hom_corner(pp.elem, dxp, dxp, dx, dx, nz, db);
    Mat gh = hom_corner(gamma, dxp, dx, dx, 0, nz, db);        // X -> X'
    Mat gph = hom_corner(gamma_prime, dx, dxp, 0, dx, nz, db); // X' -> X
    if (!(a.alg.product(gh, gph) == pph) || !(a.alg.product(gph, gh) == ph))
        throw EngineError("witness-equations-fail",
                          "gamma gamma' = p' and gamma' gamma = p do not hold");
    Mat g0 = a.alg.unit - ph - pph + a.alg.product(a.alg.product(ph, gph), pph) +
             a.alg.product(a.alg.product(pph, gh), ph);
    InvariantInvertible out = check_invertible(h, z, b, g0);
    if (!(a.alg.product(a.alg.product(g0, ph), out.inverse) == pph))
        throw EngineError("witness-equations-fail", "gamma_0 p gamma_0^{-1} != p'");
    return out;
}

// ---------------------------------------------------------------------------
// Pairings

struct InvariantFunctional {
    Mat coords; // functional on H in the dual basis

    Scalar at(const Mat& element) const { return (coords.transpose() * element).get(0, 0); }
};

namespace detail {

// (Psi^m f)(eta (x) Q) for every basis eta of H, where f is given by its
// ambient coordinates on H (x) B^{(m+1)} and Q lives on
// (End(X) (x) B)^{(m+1)}.
inline Mat psi_evaluate(const Hopf& h, const RightModule& x, int db, int m, const Mat& f_amb,
                        const Mat& q) {
    Mat pred = psi_predual(h, x, db, m);
    Mat g = pred.transpose() * f_amb; // functional on H (x) (End(X)(x)B)^{(m+1)}
    int nh = h.dim();
    int block = g.rows() / nh;
    Mat r(nh, 1, h.field());
    for (int eta = 0; eta < nh; ++eta) {
        Scalar acc = Scalar::zero(h.field());
        for (int i = 0; i < block; ++i) {
            Scalar qv = q.get(i, 0);
            if (!qv.is_zero()) acc = acc + g.get(eta * block + i, 0) * qv;
        }
        r.set(eta, 0, acc);
    }
    return r;
}

inline void require_cocycle(const EquivariantComplex& e, const Mat& f, int deg) {
    if (deg + 1 > e.obj.n_max())
        throw EngineError("degree-out-of-range", "cocycle check needs level deg+1");
    if (!(op_b(e.obj, deg + 1) * f).is_zero())
        throw EngineError("not-a-cocycle", "b f != 0 in degree " + std::to_string(deg + 1));
}

} // namespace detail

// <[f],[p]>(w) = (Psi^{2n} f)(w (x) p (x) ... (x) p)   (2n+1 copies of p).
// f is given in the invariant basis of degree 2n; membership of the result
// in R(H) is asserted.
inline InvariantFunctional pair_even(const EquivariantComplex& e, const Mat& f, int two_n,
                                     const InvariantIdempotent& p) {
    detail::require_cocycle(e, f, two_n);
    Mat q = p.elem;
    for (int i = 1; i <= two_n; ++i) q = kron(q, p.elem);
    Mat r = detail::psi_evaluate(e.hopf, p.x, e.base.alg.dim, two_n, e.incl[two_n] * f, q);
    if (!in_r_h(e.hopf, r)) throw EngineError("internal", "pairing left R(H)");
    return {r};
}

// <[f],[u]>(w) = (Psi^{2n+1} f)(w (x) (u^{-1}-1) (x) (u-1) (x) ...).
inline InvariantFunctional pair_odd(const EquivariantComplex& e, const Mat& f, int deg,
                                    const InvariantInvertible& u) {
    detail::require_cocycle(e, f, deg);
    ModuleAlgebra a = end_tensor_algebra(e.hopf, u.x, e.base);
    Mat vm = u.inverse - a.alg.unit, um = u.elem - a.alg.unit;
    Mat q = vm;
    for (int i = 1; i <= deg; ++i) q = kron(q, i % 2 == 1 ? um : vm);
    Mat r = detail::psi_evaluate(e.hopf, u.x, e.base.alg.dim, deg, e.incl[deg] * f, q);
    if (!in_r_h(e.hopf, r)) throw EngineError("internal", "pairing left R(H)");
    return {r};
}

// <[f],[p]>_rho = (Psi_rho^{2n} f)(p^{(x)(2n+1)}) on the theta_rho-twisted
// complex, with (Psi_rho f)((T0 (x) b0) (x) ...) =
// f(b0 (x) ... (x) bn) Tr(pi_X(rho^{-1}) T0 ... Tn).
inline Scalar pair_twisted(const EquivariantComplex& tw, const Mat& f, int two_n,
                           const InvariantIdempotent& p, const Hopf& h, const Mat& rho) {
    detail::require_cocycle(tw, f, two_n);
    int nx = p.x.dim, db = tw.base.alg.dim;
    int e1 = nx * nx * db;
    Mat m_rho = p.x.act_by(h.antipode_inv * rho); // pi_X(rho^{-1})
    Mat q = p.elem;
    for (int i = 1; i <= two_n; ++i) q = kron(q, p.elem);
    Mat f_amb = tw.incl[two_n] * f;
    Scalar acc = Scalar::zero(tw.obj.field);
    long long pw = 1;
    for (int i = 0; i <= two_n; ++i) pw *= e1;
    int n = two_n;
    for (long long idx = 0; idx < pw; ++idx) {
        Scalar qv = q.get(static_cast<int>(idx), 0);
        if (qv.is_zero()) continue;
        long long rem = idx;
        std::vector<int> pi(n + 1), qi(n + 1), beta(n + 1);
        for (int i = n; i >= 0; --i) {
            int s = static_cast<int>(rem % e1);
            rem /= e1;
            beta[i] = s % db;
            qi[i] = (s / db) % nx;
            pi[i] = s / (db * nx);
        }
        bool chain = true;
        for (int i = 0; i < n && chain; ++i) chain = (qi[i] == pi[i + 1]);
        if (!chain) continue;
        Scalar tr = m_rho.get(qi[n], pi[0]);
        if (tr.is_zero()) continue;
        int brow = 0;
        for (int i = 0; i <= n; ++i) brow = brow * db + beta[i];
        acc = acc + qv * tr * f_amb.get(brow, 0);
    }
    return acc;
}

// [u1] + [u2] = [[u1, T], [0, u2]] at the level of pairings, for invariant
// T in Hom(X2, X1) (x) B.
inline VerifyReport triangular_relation_check(const EquivariantComplex& e, const Mat& f, int deg,
                                              const InvariantInvertible& u1,
                                              const InvariantInvertible& u2, const Mat& t) {
    VerifyReport r;
    const Hopf& h = e.hopf;
    const ModuleAlgebra& b = e.base;
    int d1 = u1.x.dim, d2 = u2.x.dim, db = b.alg.dim;
    RightModule z = direct_sum_module(h, u1.x, u2.x);
    ModuleAlgebra a = end_tensor_algebra(h, z, b);
    Mat u = hom_corner(u1.elem, d1, d1, 0, 0, z.dim, db) +
            hom_corner(u2.elem, d2, d2, d1, d1, z.dim, db) +
            hom_corner(t, d1, d2, 0, d1, z.dim, db);
    InvariantInvertible uu = check_invertible(h, z, b, u);
    Mat lhs = pair_odd(e, f, deg, u1).coords + pair_odd(e, f, deg, u2).coords;
    Mat rhs = pair_odd(e, f, deg, uu).coords;
    r.require(lhs == rhs, "triangular relation <f,u1> + <f,u2> = <f,[[u1,T],[0,u2]]>");
    return r;
}

// ---------------------------------------------------------------------------
// Crossed-product correspondence (semisimple H)

// X (x) B as a right module over B x| H: (x (x) c) . (b (x) w) = (x (x) cb) <| w.
inline RightModule xb_crossed_module(const Hopf& h, const ModuleAlgebra& b, const RightModule& x,
                                     const CrossedProduct& cp) {
    int nh = h.dim(), db = b.alg.dim, d = x.dim * db, dcp = cp.alg.dim;
    RightModule m;
    m.dim = d;
    m.hdim = dcp;
    m.field = h.field();
    m.act = Mat(d, d * dcp, h.field());
    RightModule xb = tensor_module(h, x, b.mod);
    for (int beta = 0; beta < db; ++beta)
        for (int j = 0; j < nh; ++j) {
            Mat op = xb.act_by(h.basis(j)) *
                     kron(Mat::identity(x.dim, h.field()), b.alg.rmul(b.alg.basis(beta)));
            int a = beta * nh + j;
            for (int i = 0; i < d; ++i)
                for (const auto& [c, v] : op.row(i)) m.act.set(i, c * dcp + a, v);
        }
    return m;
}

// Left action of an element of End(X) (x) B on X (x) B: T (x) b acts as
// x (x) c -> Tx (x) bc.  Commutes with the crossed-product module structure
// when the element is invariant.
inline Mat left_operator(const ModuleAlgebra& b, int nx, const Mat& elem) {
    int db = b.alg.dim;
    const FieldPtr& f = b.alg.field;
    Mat op(nx * db, nx * db, f);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j)
            for (int beta = 0; beta < db; ++beta) {
                Scalar v = elem.get((i * nx + j) * db + beta, 0);
                if (v.is_zero()) continue;
                Mat e_ij(nx, nx, f);
                e_ij.set(i, j, Scalar::one(f));
                op = op + v * kron(e_ij, b.alg.lmul(b.alg.basis(beta)));
            }
    return op;
}

struct JulgPresentation {
    int k = 0;        // number of free-module generators ( = dim X )
    Mat q;            // idempotent in Mat_k(B x| H), coords (i*k+j)*dim(cp)+a
    Mat xp_basis;     // basis of X_p = p(X (x) B) inside X (x) B
    Mat phi;          // (B x| H)^k -> X (x) B, onto X_p (module map)
    Mat sigma;        // X_p -> (B x| H)^k splitting (module map), phi sigma = id
    RightModule xp;   // X_p as a (B x| H)-module in the xp_basis coordinates
    RightModule free; // (B x| H)^k
};

// Present X_p = p(X (x) B) as q (B x| H)^k with explicit mutually inverse
// module maps.  Requires H semisimple (normalized integral).
inline JulgPresentation julg_forward(const Hopf& h, const ModuleAlgebra& b,
                                     const CrossedProduct& cp, const InvariantIdempotent& p) {
    auto integral = right_integral(h);
    if (!integral || !integral->normalized)
        throw EngineError("H-not-semisimple", "no normalized right integral");
    const FieldPtr& f = h.field();
    int nx = p.x.dim, db = b.alg.dim, dcp = cp.alg.dim;
    JulgPresentation out;
    out.k = nx;

    RightModule xbm = xb_crossed_module(h, b, p.x, cp);
    Mat p_op = left_operator(b, nx, p.elem);
    out.xp_basis = column_space(p_op);
    int r = out.xp_basis.cols();
    if (r == 0) {
        out.q = Mat(out.k * out.k * dcp, 1, f);
        out.phi = Mat(nx * db, out.k * dcp, f);
        out.sigma = Mat(out.k * dcp, 0, f);
        out.xp = trivial_module(h, 0);
        out.xp.hdim = dcp;
        out.xp.act = Mat(0, 0, f);
        out.free.dim = out.k * dcp;
        out.free.hdim = dcp;
        out.free.field = f;
        out.free.act = kron(Mat::identity(out.k, f), cp.alg.mult);
        return out;
    }

    // free module (B x| H)^k with componentwise right multiplication
    out.free.dim = out.k * dcp;
    out.free.hdim = dcp;
    out.free.field = f;
    out.free.act = kron(Mat::identity(out.k, f), cp.alg.mult);

    // phi(e_i (x) a) = (p(x_i (x) 1)) . a
    out.phi = Mat(nx * db, out.k * dcp, f);
    for (int i = 0; i < out.k; ++i) {
        Mat gi = p_op * kron(Mat::unit_column(nx, i, f), b.alg.unit);
        for (int a = 0; a < dcp; ++a) {
            Mat col = xbm.act_by(cp.alg.basis(a)) * gi;
            for (int row = 0; row < col.rows(); ++row) {
                Scalar v = col.get(row, 0);
                if (!v.is_zero()) out.phi.set(row, i * dcp + a, v);
            }
        }
    }

    // X_p as a module in xp_basis coordinates
    out.xp.dim = r;
    out.xp.hdim = dcp;
    out.xp.field = f;
    out.xp.act = Mat(r, r * dcp, f);
    for (int a = 0; a < dcp; ++a) {
        auto ra = solve(out.xp_basis, xbm.act_by(cp.alg.basis(a)) * out.xp_basis);
        if (!ra) throw EngineError("internal", "X_p is not invariant under the crossed product");
        for (int i = 0; i < r; ++i)
            for (const auto& [c, v] : ra->row(i)) out.xp.act.set(i, c * dcp + a, v);
    }

    // sigma: module-map splitting with phi sigma = xp_basis (vec unknowns,
    // row-major vec(A T B) = (A (x) B^T) vec(T))
    int rows_s = out.k * dcp;
    Mat ir = Mat::identity(r, f);
    Mat sys = kron(out.phi, ir.transpose());
    Mat rhs(out.phi.rows() * r, 1, f);
    for (int i = 0; i < out.xp_basis.rows(); ++i)
        for (const auto& [j, v] : out.xp_basis.row(i)) rhs.set(i * r + j, 0, v);
    for (int a = 0; a < dcp; ++a) {
        Mat ra_xp = out.xp.act_by(cp.alg.basis(a));
        Mat ra_f = out.free.act_by(cp.alg.basis(a));
        Mat cond = kron(Mat::identity(rows_s, f), ra_xp.transpose()) -
                   kron(ra_f, ir.transpose());
        sys = vstack(sys, cond);
        rhs = vstack(rhs, Mat(cond.rows(), 1, f));
    }
    auto vec_sigma = solve(sys, rhs);
    if (!vec_sigma)
        throw EngineError("H-not-semisimple", "no equivariant splitting of the presentation");
    out.sigma = Mat(rows_s, r, f);
    for (int i = 0; i < rows_s; ++i)
        for (int j = 0; j < r; ++j) {
            Scalar v = vec_sigma->get(i * r + j, 0);
            if (!v.is_zero()) out.sigma.set(i, j, v);
        }

    // q = sigma phi as an element of Mat_k(B x| H)
    Mat q_op = out.sigma * [&] {
        // phi in xp coordinates: solve(xp_basis, phi)
        auto s = solve(out.xp_basis, out.phi);
        if (!s) throw EngineError("internal", "phi does not land in X_p");
        return *s;
    }();
    out.q = Mat(out.k * out.k * dcp, 1, f);
    for (int j = 0; j < out.k; ++j) {
        Mat ej(out.k * dcp, 1, f);
        for (int beta = 0; beta < dcp; ++beta) {
            Scalar v = cp.alg.unit.get(beta, 0);
            if (!v.is_zero()) ej.set(j * dcp + beta, 0, v);
        }
        Mat w = q_op * ej;
        for (int i = 0; i < out.k; ++i)
            for (int beta = 0; beta < dcp; ++beta) {
                Scalar v = w.get(i * dcp + beta, 0);
                if (!v.is_zero()) out.q.set((i * out.k + j) * dcp + beta, 0, v);
            }
    }
    // certify q: left multiplication by q equals sigma phi, and q^2 = q
    Mat l_q(out.k * dcp, out.k * dcp, f);
    for (int i = 0; i < out.k; ++i)
        for (int j = 0; j < out.k; ++j) {
            Mat e_ij(out.k, out.k, f);
            e_ij.set(i, j, Scalar::one(f));
            for (int beta = 0; beta < dcp; ++beta) {
                Scalar v = out.q.get((i * out.k + j) * dcp + beta, 0);
                if (!v.is_zero())
                    l_q = l_q + v * kron(e_ij, cp.alg.lmul(cp.alg.basis(beta)));
            }
        }
    if (!(l_q == q_op)) throw EngineError("internal", "q is not a matrix over the crossed product");
    Algebra matk_cp = tensor_algebra(matrix_algebra(out.k, f), cp.alg);
    if (!(matk_cp.product(out.q, out.q) == out.q))
        throw EngineError("internal", "q is not idempotent");
    return out;
}

// The module q (B x| H)^k defined by an idempotent q in Mat_k(B x| H).
inline RightModule julg_reverse(const CrossedProduct& cp, int k, const Mat& q) {
    const FieldPtr& f = cp.alg.field;
    int dcp = cp.alg.dim;
    Mat l_q(k * dcp, k * dcp, f);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Mat e_ij(k, k, f);
            e_ij.set(i, j, Scalar::one(f));
            for (int beta = 0; beta < dcp; ++beta) {
                Scalar v = q.get((i * k + j) * dcp + beta, 0);
                if (!v.is_zero()) l_q = l_q + v * kron(e_ij, cp.alg.lmul(cp.alg.basis(beta)));
            }
        }
    Mat basis = column_space(l_q);
    RightModule m;
    m.dim = basis.cols();
    m.hdim = dcp;
    m.field = f;
    m.act = Mat(m.dim, m.dim * dcp, f);
    Mat free_act = kron(Mat::identity(k, f), cp.alg.mult);
    for (int a = 0; a < dcp; ++a) {
        Mat ra = free_act * kron(Mat::identity(k * dcp, f), cp.alg.basis(a));
        auto c = solve(basis, ra * basis);
        if (!c) throw EngineError("internal", "q-module not invariant");
        for (int i = 0; i < m.dim; ++i)
            for (const auto& [col, v] : c->row(i)) m.act.set(i, col * dcp + a, v);
    }
    return m;
}

// ---------------------------------------------------------------------------
// K_0 of a split semisimple crossed product

struct K0Info {
    int rank = 0;                 // K_0 is free abelian of this rank
    std::vector<int> block_sizes; // s_i with block i = Mat_{s_i}
    std::vector<Mat> generators;  // rank-one column idempotents, one per block
};

inline K0Info k0_semisimple(const CrossedProduct& cp) {
    Wedderburn w = wedderburn_blocks(cp.alg);
    if (!w.semisimple) throw EngineError("not-semisimple", "crossed product has a radical");
    if (!w.all_split) throw EngineError("not-split", "crossed product has a non-split block");
    K0Info out;
    out.rank = static_cast<int>(w.blocks.size());
    for (const auto& blk : w.blocks) {
        out.block_sizes.push_back(blk.size);
        out.generators.push_back(blk.units[0]); // E_00 of the block
    }
    return out;
}

// ---------------------------------------------------------------------------
// Module isomorphism testing

struct IsoResult {
    std::string verdict; // certified-iso | certified-noniso | heuristic-noniso
    Mat intertwiner;     // invertible intertwiner when certified-iso
};

inline IsoResult iso_test(const Algebra& a, const RightModule& m1, const RightModule& m2,
                          unsigned seed = 0, int samples = 8) {
    const FieldPtr& f = a.field;
    if (m1.dim != m2.dim) return {"certified-noniso", Mat()};
    if (m1.dim == 0) return {"certified-iso", Mat()};
    // intertwiner space {T : T act1(x) = act2(x) T for all x}
    Mat sys(0, m1.dim * m2.dim, f);
    for (int j = 0; j < a.dim; ++j) {
        Mat a1 = m1.act_by(a.basis(j)), a2 = m2.act_by(a.basis(j));
        Mat cond = kron(Mat::identity(m2.dim, f), a1.transpose()) -
                   kron(a2, Mat::identity(m1.dim, f));
        sys = sys.rows() == 0 ? cond : vstack(sys, cond);
    }
    Mat space = kernel_basis(sys);
    if (space.cols() == 0) return {"certified-noniso", Mat()};

    // in the split semisimple case, multiplicity vectors decide
    Wedderburn w = wedderburn_blocks(a);
    if (w.semisimple && w.all_split) {
        for (const auto& blk : w.blocks) {
            Mat e1 = m1.act_by(blk.central_idempotent), e2 = m2.act_by(blk.central_idempotent);
            if (block_multiplicity(blk, e1) != block_multiplicity(blk, e2))
                return {"certified-noniso", Mat()};
        }
    }

    auto unvec = [&](const Mat& v) {
        Mat t(m2.dim, m1.dim, f);
        for (int i = 0; i < m2.dim; ++i)
            for (int j = 0; j < m1.dim; ++j) {
                Scalar s = v.get(i * m1.dim + j, 0);
                if (!s.is_zero()) t.set(i, j, s);
            }
        return t;
    };
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < samples; ++trial) {
        Mat v(space.rows(), 1, f);
        for (int j = 0; j < space.cols(); ++j) {
            int c = trial == 0 ? 1 : dist(rng); // first try: sum of basis vectors
            if (c != 0) v = v + Scalar(Rat(c), f) * space.column(j);
        }
        Mat t = unvec(v);
        if (rank(t) == m1.dim) return {"certified-iso", t};
    }
    return {"heuristic-noniso", Mat()};
}

} // namespace eqcyc
