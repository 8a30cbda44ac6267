// Right module structures over a Hopf algebra, module algebras, and the
// crossed product.  A RightModule stores the action X (x) H -> X as a
// (dim x dim*hdim) matrix, so act_by(omega) = act o (id (x) omega).

#pragma once

#include "hopf.hpp"

namespace eqcyc {

struct RightModule {
    int dim = 0;
    int hdim = 0;
    FieldPtr field;
    Mat act; // dim x (dim*hdim)

    Mat act_by(const Mat& omega) const {
        return act * kron(Mat::identity(dim, field), omega);
    }
};

inline VerifyReport verify_module(const Hopf& h, const RightModule& m) {
    VerifyReport r;
    int d = m.dim, n = h.dim();
    const FieldPtr& f = h.field();
    Mat Ix = Mat::identity(d, f), Ih = Mat::identity(n, f);
    r.require(m.hdim == n, "module hdim matches Hopf algebra");
    r.require(m.act.rows() == d && m.act.cols() == d * n, "action shape");
    if (!r.ok) return r;
    r.require(m.act_by(h.alg.unit) == Ix, "unit acts trivially");
    r.require(m.act * kron(m.act, Ih) == m.act * kron(Ix, h.alg.mult), "action associativity");
    return r;
}

inline RightModule trivial_module(const Hopf& h, int dim) {
    RightModule m;
    m.dim = dim;
    m.hdim = h.dim();
    m.field = h.field();
    m.act = kron(Mat::identity(dim, h.field()), h.counit);
    return m;
}

// H on itself by right multiplication.
inline RightModule regular_module(const Hopf& h) {
    RightModule m;
    m.dim = h.dim();
    m.hdim = h.dim();
    m.field = h.field();
    m.act = h.alg.mult;
    return m;
}

// eta <| omega = S'(omega_(0)) eta omega_(1), with S' = antipode or its
// inverse.  The inverse variant is the module structure used on the Hopf
// factor of the equivariant complexes.
inline RightModule adjoint_module(const Hopf& h, bool use_antipode_inverse) {
    int n = h.dim();
    const FieldPtr& f = h.field();
    const Mat& S = use_antipode_inverse ? h.antipode_inv : h.antipode;
    Mat I = Mat::identity(n, f);
    // eta (x) omega -> eta (x) omega1 (x) omega2 -> (S'(omega1), eta, omega2)
    Mat p = tensor_permutation({n, n, n}, {1, 0, 2}, f);
    RightModule m;
    m.dim = n;
    m.hdim = n;
    m.field = f;
    m.act = h.alg.mult * kron(h.alg.mult, I) * kron(kron(S, I), I) * p * kron(I, h.comult);
    return m;
}

// (x1 (x) x2) <| omega = x1 <| omega_(0) (x) x2 <| omega_(1).
inline RightModule tensor_module(const Hopf& h, const RightModule& a, const RightModule& b) {
    int n = h.dim();
    const FieldPtr& f = h.field();
    Mat p = tensor_permutation({a.dim, b.dim, n, n}, {0, 2, 1, 3}, f);
    RightModule m;
    m.dim = a.dim * b.dim;
    m.hdim = n;
    m.field = f;
    m.act = kron(a.act, b.act) * p *
            kron(Mat::identity(a.dim * b.dim, f), h.comult);
    return m;
}

inline RightModule tensor_power_module(const Hopf& h, const RightModule& a, int k) {
    RightModule m = a;
    for (int i = 1; i < k; ++i) m = tensor_module(h, m, a);
    return m;
}

// Adjoint action on End(X): T <| omega = pi(omega_(0)) T pi(S^{-1}(omega_(1)))
// where pi(omega) is the action operator of X.  In the row-major vec
// convention the operator for T -> A T B is A (x) B^T.
inline RightModule end_module(const Hopf& h, const RightModule& x) {
    int n = h.dim(), d = x.dim;
    const FieldPtr& f = h.field();
    RightModule m;
    m.dim = d * d;
    m.hdim = n;
    m.field = f;
    m.act = Mat(m.dim, m.dim * n, f);
    for (int j = 0; j < n; ++j) {
        // Delta(e_j) = sum_k c_k (x) c'_k read off the comult column
        Mat delta = h.comult * h.basis(j); // n^2 x 1
        Mat op(m.dim, m.dim, f);
        for (int idx = 0; idx < n * n; ++idx) {
            Scalar c = delta.get(idx, 0);
            if (c.is_zero()) continue;
            Mat a = x.act_by(h.basis(idx / n));
            Mat b = x.act_by(h.antipode_inv * h.basis(idx % n));
            op = op + c * kron(a, b.transpose());
        }
        for (int i = 0; i < m.dim; ++i)
            for (const auto& [col, v] : op.row(i)) m.act.set(i, col * n + j, v);
    }
    return m;
}

// Action on End(X) (x) B from the equivariant-module structure of X (x) B:
// (T (x) b) <| omega = pi(omega_(0)) T pi S^{-1}(omega_(2)) (x) b <| omega_(1).
inline RightModule endx_tensor_b(const Hopf& h, const RightModule& x, const RightModule& bmod) {
    int n = h.dim(), d = x.dim, db = bmod.dim;
    const FieldPtr& f = h.field();
    RightModule m;
    m.dim = d * d * db;
    m.hdim = n;
    m.field = f;
    m.act = Mat(m.dim, m.dim * n, f);
    Mat delta2 = delta_n(h, 2); // n^3 x n
    for (int j = 0; j < n; ++j) {
        Mat dj = delta2 * h.basis(j); // n^3 x 1
        Mat op(m.dim, m.dim, f);
        for (int idx = 0; idx < n * n * n; ++idx) {
            Scalar c = dj.get(idx, 0);
            if (c.is_zero()) continue;
            int w0 = idx / (n * n), w1 = (idx / n) % n, w2 = idx % n;
            Mat a = x.act_by(h.basis(w0));
            Mat b = x.act_by(h.antipode_inv * h.basis(w2));
            Mat bb = bmod.act_by(h.basis(w1));
            op = op + c * kron(kron(a, b.transpose()), bb);
        }
        for (int i = 0; i < m.dim; ++i)
            for (const auto& [col, v] : op.row(i)) m.act.set(i, col * n + j, v);
    }
    return m;
}

// Basis of {x : x <| omega = eps(omega) x} as matrix columns.
inline Mat invariants(const Hopf& h, const RightModule& m) {
    Mat stacked(0, m.dim, m.field);
    for (int j = 0; j < h.dim(); ++j) {
        Scalar ej = (h.counit * h.basis(j)).get(0, 0);
        Mat cond = m.act_by(h.basis(j)) - ej * Mat::identity(m.dim, m.field);
        stacked = stacked.rows() == 0 ? cond : vstack(stacked, cond);
    }
    return kernel_basis(stacked);
}

// ---------------------------------------------------------------------------
// Module algebras

struct ModuleAlgebra {
    Algebra alg;
    RightModule mod; // same dim
};

inline VerifyReport verify_module_algebra(const Hopf& h, const ModuleAlgebra& b) {
    VerifyReport r = verify_algebra(b.alg);
    VerifyReport rm = verify_module(h, b.mod);
    for (const auto& s : rm.failures) r.require(false, s);
    r.ok = r.ok && rm.ok;
    if (!r.ok) return r;
    int d = b.alg.dim, n = h.dim();
    const FieldPtr& f = h.field();
    // (b1 b2) <| omega = (b1 <| omega_(0)) (b2 <| omega_(1))
    Mat p = tensor_permutation({d, d, n, n}, {0, 2, 1, 3}, f);
    Mat lhs = b.mod.act * kron(b.alg.mult, Mat::identity(n, f));
    Mat rhs = b.alg.mult * kron(b.mod.act, b.mod.act) * p *
              kron(Mat::identity(d * d, f), h.comult);
    r.require(lhs == rhs, "action multiplicative");
    r.require(b.mod.act * kron(b.alg.unit, Mat::identity(n, f)) == b.alg.unit * h.counit,
              "unit invariant");
    return r;
}

// Mat_k(B) = End(X) (x) B for the trivial k-dimensional module X, as a
// module algebra.
inline ModuleAlgebra matrix_amplification(const Hopf& h, const ModuleAlgebra& b, int k) {
    ModuleAlgebra out;
    out.alg = tensor_algebra(matrix_algebra(k, b.alg.field), b.alg);
    out.mod = endx_tensor_b(h, trivial_module(h, k), b.mod);
    return out;
}

// ---------------------------------------------------------------------------
// Crossed product B x| H: (b (x) omega)(c (x) eta) = b (c <| S^{-1}(omega_(1)))
// (x) omega_(0) eta.

struct CrossedProduct {
    Algebra alg;      // dim = dim(B) * dim(H)
    Mat embed_b;      // dim x dim(B)
    Mat embed_h;      // dim x dim(H)
};

inline CrossedProduct crossed_product(const Hopf& h, const ModuleAlgebra& b) {
    int db = b.alg.dim, n = h.dim();
    const FieldPtr& f = h.field();
    CrossedProduct cp;
    cp.alg.dim = db * n;
    cp.alg.field = f;
    // b (x) omega (x) c (x) eta
    //   -> b (x) omega0 (x) omega1 (x) c (x) eta          (comult on omega)
    //   -> b (x) c (x) S^{-1}(omega1) (x) omega0 (x) eta  (permute + antipode)
    //   -> b (x) (c <| .) (x) omega0 eta
    Mat step1 = kron(Mat::identity(db, f),
                     kron(h.comult, Mat::identity(db * n, f))); // b,w0,w1,c,eta
    Mat perm = tensor_permutation({db, n, n, db, n}, {0, 3, 2, 1, 4}, f); // b,c,w1,w0,eta
    Mat sinv = kron(Mat::identity(db * db, f),
                    kron(h.antipode_inv, Mat::identity(n * n, f)));
    Mat actc = kron(Mat::identity(db, f),
                    kron(b.mod.act, Mat::identity(n * n, f))); // b, c', w0, eta
    Mat multb = kron(b.alg.mult, h.alg.mult);
    cp.alg.mult = multb * actc * sinv * perm * step1;
    cp.alg.unit = kron(b.alg.unit, h.alg.unit);
    cp.embed_b = kron(Mat::identity(db, f), h.alg.unit);
    cp.embed_h = kron(b.alg.unit, Mat::identity(n, f));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < n; ++j)
            cp.alg.names.push_back(b.alg.name_of(i) + "." + h.alg.name_of(j));
    return cp;
}

} // namespace eqcyc
