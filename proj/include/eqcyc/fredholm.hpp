// Finite-dimensional equivariant even Fredholm modules: a coaction of a
// finite quantum group on an algebra, a graded representation with an odd
// symmetry F and a compatible corepresentation, the Chern-character cocycle
// phi_F, the equivariant index as an R(H)-valued character, the index
// theorem, the modular element, the quantum index, and the twisted cocycle.

#pragma once

#include "ktheory.hpp"

namespace eqcyc {

// ---------------------------------------------------------------------------
// Coactions

// Left coaction alpha: B -> A (x) B of a finite quantum group (A, Delta).
// The dual Hopf algebra acts on B on the right by b <| w = (w (x) id) alpha(b).
struct FiniteCoaction {
    Hopf a;     // the function-algebra side
    Algebra b;  // the coefficient algebra
    Mat alpha;  // (dim A * dim B) x dim B
    bool star = false; // use the Hermitian form for orthogonal complements;
                       // over the rationals it coincides with the bilinear one
};

// b <| e_j^* = (e_j^* (x) id) alpha(b): row block j of alpha.
inline RightModule induced_module(const FiniteCoaction& co) {
    int na = co.a.dim(), nb = co.b.dim;
    RightModule m;
    m.dim = nb;
    m.hdim = na;
    m.field = co.b.field;
    m.act = Mat(nb, nb * na, co.b.field);
    for (int col = 0; col < nb; ++col)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k) {
                Scalar v = co.alpha.get(j * nb + k, col);
                if (!v.is_zero()) m.act.set(k, col * na + j, v);
            }
    return m;
}

inline ModuleAlgebra induced_module_algebra(const FiniteCoaction& co) {
    return {co.b, induced_module(co)};
}

inline VerifyReport verify_coaction(const FiniteCoaction& co) {
    VerifyReport r;
    int na = co.a.dim(), nb = co.b.dim;
    const FieldPtr& f = co.b.field;
    Mat ib = Mat::identity(nb, f), ia = Mat::identity(na, f);
    r.require(co.alpha.rows() == na * nb && co.alpha.cols() == nb, "coaction shape");
    if (!r.ok) return r;
    r.require(kron(co.a.comult, ib) * co.alpha == kron(ia, co.alpha) * co.alpha,
              "coassociativity (Delta (x) id) alpha = (id (x) alpha) alpha");
    r.require(kron(co.a.counit, ib) * co.alpha == ib, "counit law (eps (x) id) alpha = id");
    Algebra ab = tensor_algebra(co.a.alg, co.b);
    r.require(co.alpha * co.b.mult == ab.mult * kron(co.alpha, co.alpha),
              "alpha is multiplicative");
    r.require(co.alpha * co.b.unit == kron(co.a.alg.unit, co.b.unit), "alpha is unital");
    Hopf dual = dual_hopf(co.a);
    RightModule m = induced_module(co);
    VerifyReport rm = verify_module(dual, m);
    r.require(rm.ok, "induced dual action is a module action");
    VerifyReport rma = verify_module_algebra(dual, {co.b, m});
    r.require(rma.ok, "induced dual action is a module-algebra action");
    return r;
}

// ---------------------------------------------------------------------------
// Fredholm modules

// Graded representation pi of B on H with grading gamma, odd symmetry F and
// a corepresentation of A stored through the dual representation pi_U.
// Operator tables hold vec(op) row-major, one column per algebra basis
// element.
struct EquivariantFredholmModule {
    FiniteCoaction co;
    int dim = 0; // dim H
    Mat pi;      // dim^2 x dim B
    Mat f;       // the symmetry F
    Mat gamma;   // the grading
    Mat pi_u;    // dim^2 x dim A (dual-basis coordinates)
};

namespace detail {

// assemble the operator sum_j coords_j * unvec(table column j)
inline Mat op_of(const Mat& table, const Mat& coords, int d) {
    Mat out(d, d, table.field());
    for (int j = 0; j < coords.rows(); ++j) {
        Scalar c = coords.get(j, 0);
        if (c.is_zero()) continue;
        for (int i = 0; i < d * d; ++i) {
            Scalar v = table.get(i, j);
            if (!v.is_zero()) out.set(i / d, i % d, out.get(i / d, i % d) + c * v);
        }
    }
    return out;
}

inline Mat vec_op(const Mat& op) {
    int d = op.rows();
    Mat out(d * d, 1, op.field());
    for (int i = 0; i < d; ++i)
        for (const auto& [j, v] : op.row(i)) out.set(i * d + j, 0, v);
    return out;
}

} // namespace detail

inline Mat fm_pi(const EquivariantFredholmModule& fm, const Mat& b) {
    return detail::op_of(fm.pi, b, fm.dim);
}

inline Mat fm_pi_u(const EquivariantFredholmModule& fm, const Mat& omega) {
    return detail::op_of(fm.pi_u, omega, fm.dim);
}

inline VerifyReport verify_fredholm(const EquivariantFredholmModule& fm) {
    VerifyReport r = verify_coaction(fm.co);
    if (!r.ok) return r;
    const FieldPtr& fld = fm.co.b.field;
    int d = fm.dim, na = fm.co.a.dim(), nb = fm.co.b.dim;
    Mat id = Mat::identity(d, fld);
    r.require(fm.f * fm.f == id, "F^2 = 1");
    r.require(fm.f == fm.f.transpose(), "F is self-adjoint for the coordinate form");
    r.require(fm.gamma * fm.gamma == id, "gamma^2 = 1");
    r.require(fm.gamma * fm.f == Scalar(Rat(-1), fld) * (fm.f * fm.gamma), "F is odd");
    Hopf dual = dual_hopf(fm.co.a);
    RightModule mod = induced_module(fm.co);
    // pi: unital algebra map, even
    r.require(fm_pi(fm, fm.co.b.unit) == id, "pi is unital");
    for (int i = 0; i < nb && r.ok; ++i)
        for (int j = 0; j < nb; ++j) {
            Mat lhs = fm_pi(fm, fm.co.b.product(fm.co.b.basis(i), fm.co.b.basis(j)));
            r.require(lhs == fm_pi(fm, fm.co.b.basis(i)) * fm_pi(fm, fm.co.b.basis(j)),
                      "pi is multiplicative at basis pair " + std::to_string(i) + "," +
                          std::to_string(j));
            if (!r.ok) break;
        }
    for (int i = 0; i < nb; ++i) {
        Mat p = fm_pi(fm, fm.co.b.basis(i));
        r.require(fm.gamma * p == p * fm.gamma, "pi(b) is even at basis " + std::to_string(i));
    }
    // pi_U: unital representation of the dual, commuting with F and gamma
    r.require(fm_pi_u(fm, dual.alg.unit) == id, "pi_U is unital");
    for (int i = 0; i < na && r.ok; ++i)
        for (int j = 0; j < na; ++j) {
            Mat prod = dual.alg.product(dual.basis(i), dual.basis(j));
            r.require(fm_pi_u(fm, prod) ==
                          fm_pi_u(fm, dual.basis(i)) * fm_pi_u(fm, dual.basis(j)),
                      "pi_U is multiplicative at basis pair " + std::to_string(i) + "," +
                          std::to_string(j));
            if (!r.ok) break;
        }
    for (int j = 0; j < na; ++j) {
        Mat u = fm_pi_u(fm, dual.basis(j));
        r.require(u * fm.f == fm.f * u, "[pi_U, F] = 0 at basis " + std::to_string(j));
        r.require(u * fm.gamma == fm.gamma * u, "[pi_U, gamma] = 0 at basis " + std::to_string(j));
    }
    // equivariance: pi_U(w_(0)) pi(b <| w_(1)) = pi(b) pi_U(w)
    for (int j = 0; j < na && r.ok; ++j)
        for (int b = 0; b < nb; ++b) {
            Mat lhs(d, d, fld);
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < na; ++l) {
                    Scalar c = fm.co.a.alg.mult.get(j, k * na + l); // dual comult coefficient
                    if (c.is_zero()) continue;
                    lhs = lhs + c * (fm_pi_u(fm, dual.basis(k)) *
                                     fm_pi(fm, mod.act_by(dual.basis(l)) * fm.co.b.basis(b)));
                }
            r.require(lhs == fm_pi(fm, fm.co.b.basis(b)) * fm_pi_u(fm, dual.basis(j)),
                      "equivariance at basis pair " + std::to_string(j) + "," + std::to_string(b));
            if (!r.ok) break;
        }
    return r;
}

// ---------------------------------------------------------------------------
// The Chern-character cocycle

// phi_F(w (x) b_0 (x) ... (x) b_2n)
//   = ((-1)^n / 2) Tr(gamma pi_U(w) F [F, pi(b_0)] ... [F, pi(b_2n)])
// as an ambient functional on A-hat (x) B^{(x)(2n+1)}.
inline Mat phi_f_ambient(const EquivariantFredholmModule& fm, int n) {
    int na = fm.co.a.dim(), nb = fm.co.b.dim, d = fm.dim;
    const FieldPtr& fld = fm.co.b.field;
    Hopf dual = dual_hopf(fm.co.a);
    std::vector<Mat> comm(nb, Mat(d, d, fld));
    for (int b = 0; b < nb; ++b) {
        Mat p = fm_pi(fm, fm.co.b.basis(b));
        comm[b] = fm.f * p - p * fm.f;
    }
    Scalar pref = Scalar(Rat(n % 2 == 0 ? 1 : -1, 2), fld);
    long long pw = 1;
    for (int i = 0; i <= 2 * n; ++i) pw *= nb;
    Mat out(static_cast<int>(na * pw), 1, fld);
    std::vector<int> widx(2 * n + 1, 0);
    for (long long idx = 0; idx < pw; ++idx) {
        long long rem = idx;
        for (int i = 2 * n; i >= 0; --i) {
            widx[i] = static_cast<int>(rem % nb);
            rem /= nb;
        }
        Mat prod = fm.f;
        for (int i = 0; i <= 2 * n; ++i) prod = prod * comm[widx[i]];
        for (int j = 0; j < na; ++j) {
            Scalar v = pref * (fm.gamma * fm_pi_u(fm, dual.basis(j)) * prod).trace();
            if (!v.is_zero()) out.set(static_cast<int>(j * pw + idx), 0, v);
        }
    }
    return out;
}

// phi_F in the invariant basis of a complex built from the induced action;
// membership, the cocycle law and cyclicity are asserted.
inline Mat phi_f(const EquivariantFredholmModule& fm, const EquivariantComplex& e, int n) {
    Mat amb = phi_f_ambient(fm, n);
    auto c = solve(e.incl[2 * n], amb);
    if (!c || !(e.incl[2 * n] * *c == amb))
        throw EngineError("internal", "phi_F is not invariant");
    if (!(op_lambda(e.obj, 2 * n) * *c == *c))
        throw EngineError("internal", "phi_F is not cyclic");
    if (2 * n + 1 <= e.obj.n_max() && !(op_b(e.obj, 2 * n + 1) * *c).is_zero())
        throw EngineError("internal", "phi_F is not a cocycle");
    return *c;
}

// ---------------------------------------------------------------------------
// The equivariant index

struct IndexCharacter {
    Mat plus;   // trace of the dual algebra on ker(p_- F p_+)
    Mat minus;  // trace on the orthogonal complement of its image
    Mat coords; // plus - minus, a functional on the dual algebra
};

namespace detail {

inline Mat restricted_trace_character(const EquivariantFredholmModule& fm, const Hopf& dual,
                                      const Mat& basis) {
    int na = dual.dim();
    Mat out(na, 1, fm.co.b.field);
    if (basis.cols() == 0) return out;
    for (int j = 0; j < na; ++j) {
        auto r = solve(basis, fm_pi_u(fm, dual.basis(j)) * basis);
        if (!r) throw EngineError("internal", "subspace is not invariant under the dual algebra");
        out.set(j, 0, r->trace());
    }
    return out;
}

} // namespace detail

// Index character of an invariant idempotent p in B: with
// p_pm = (1 pm gamma)/2 pi(p), the operator p_- F p_+ has invariant kernel
// and cokernel; the character is the difference of the dual traces there.
inline IndexCharacter ind_f(const EquivariantFredholmModule& fm, const Mat& p) {
    Hopf dual = dual_hopf(fm.co.a);
    RightModule mod = induced_module(fm.co);
    check_idempotent(dual, trivial_module(dual, 1), {fm.co.b, mod},
                     kron(Mat::identity(1, fm.co.b.field), p));
    const FieldPtr& fld = fm.co.b.field;
    int d = fm.dim;
    Mat id = Mat::identity(d, fld);
    Scalar h = Scalar(Rat(1, 2), fld);
    Mat pop = fm_pi(fm, p);
    Mat p_plus = h * ((id + fm.gamma) * pop);
    Mat p_minus = h * ((id - fm.gamma) * pop);
    Mat v_plus = column_space(p_plus), v_minus = column_space(p_minus);
    Mat t = p_minus * fm.f * p_plus;
    // kernel inside p_+ H_+
    Mat ker = v_plus * kernel_basis(t * v_plus);
    // orthogonal complement of the image inside p_- H_-
    Mat img = t * v_plus;
    Mat coker = v_minus * kernel_basis(img.transpose() * v_minus);
    IndexCharacter out;
    out.plus = detail::restricted_trace_character(fm, dual, ker);
    out.minus = detail::restricted_trace_character(fm, dual, coker);
    out.coords = out.plus - out.minus;
    return out;
}

// ---------------------------------------------------------------------------
// Modular element and quantum index

struct ModularElement {
    Mat element;                 // the chosen group-like
    std::vector<Mat> candidates; // all group-likes implementing S^2
};

// Group-like rho of the given Hopf algebra with rho S^2(x) = x rho for all x.
// The first candidate in the deterministic group-like ordering is returned.
inline ModularElement modular_element(const Hopf& h) {
    Mat s2 = h.antipode * h.antipode;
    ModularElement out;
    for (const Mat& g : group_likes(h).elements)
        if (h.alg.lmul(g) * s2 == h.alg.rmul(g)) out.candidates.push_back(g);
    if (out.candidates.empty())
        throw EngineError("no-modular-group-like", "no group-like implements S^2");
    out.element = out.candidates.front();
    return out;
}

// evaluation of the index character at rho
inline Scalar q_ind(const EquivariantFredholmModule& fm, const Mat& p, const Mat& rho) {
    return (ind_f(fm, p).coords.transpose() * rho).get(0, 0);
}

// phi~_F(b_0 (x) ... (x) b_2n)
//   = ((-1)^n / 2) Tr(gamma F [F, pi(b_0)] ... [F, pi(b_2n)] pi_U(rho))
// as an ambient functional on B^{(x)(2n+1)}.
inline Mat twisted_phi_f_ambient(const EquivariantFredholmModule& fm, const Mat& rho, int n) {
    int nb = fm.co.b.dim, d = fm.dim;
    const FieldPtr& fld = fm.co.b.field;
    std::vector<Mat> comm(nb, Mat(d, d, fld));
    for (int b = 0; b < nb; ++b) {
        Mat p = fm_pi(fm, fm.co.b.basis(b));
        comm[b] = fm.f * p - p * fm.f;
    }
    Mat u_rho = fm_pi_u(fm, rho);
    Scalar pref = Scalar(Rat(n % 2 == 0 ? 1 : -1, 2), fld);
    long long pw = 1;
    for (int i = 0; i <= 2 * n; ++i) pw *= nb;
    Mat out(static_cast<int>(pw), 1, fld);
    std::vector<int> widx(2 * n + 1, 0);
    for (long long idx = 0; idx < pw; ++idx) {
        long long rem = idx;
        for (int i = 2 * n; i >= 0; --i) {
            widx[i] = static_cast<int>(rem % nb);
            rem /= nb;
        }
        Mat prod = fm.f;
        for (int i = 0; i <= 2 * n; ++i) prod = prod * comm[widx[i]];
        Scalar v = pref * (fm.gamma * prod * u_rho).trace();
        if (!v.is_zero()) out.set(static_cast<int>(idx), 0, v);
    }
    return out;
}

// phi~_F in the invariant basis of a theta_rho-twisted complex; membership
// and the twisted cocycle laws are asserted.
inline Mat twisted_phi_f(const EquivariantFredholmModule& fm, const EquivariantComplex& tw,
                         const Mat& rho, int n) {
    Mat amb = twisted_phi_f_ambient(fm, rho, n);
    auto c = solve(tw.incl[2 * n], amb);
    if (!c || !(tw.incl[2 * n] * *c == amb))
        throw EngineError("internal", "twisted phi_F is not twist-invariant");
    if (!(op_lambda(tw.obj, 2 * n) * *c == *c))
        throw EngineError("internal", "twisted phi_F is not cyclic");
    if (2 * n + 1 <= tw.obj.n_max() && !(op_b(tw.obj, 2 * n + 1) * *c).is_zero())
        throw EngineError("internal", "twisted phi_F is not a cocycle");
    return *c;
}

// ---------------------------------------------------------------------------
// Twisting by a corepresentation

// Left corepresentation v: H_V -> A (x) H_V of (A, Delta).
struct Corep {
    Mat v;
    int dim = 0;
};

inline Corep trivial_corep(const Hopf& a) {
    Corep c;
    c.dim = 1;
    c.v = a.alg.unit;
    return c;
}

// the representation pi_V(omega) = (omega (x) id)(V) of the dual algebra
inline Mat corep_rep(const Hopf& a, const Corep& v, const Mat& omega) {
    int nv = v.dim, na = a.dim();
    Mat out(nv, nv, a.field());
    for (int col = 0; col < nv; ++col)
        for (int j = 0; j < na; ++j) {
            Scalar c = omega.get(j, 0);
            if (c.is_zero()) continue;
            for (int r = 0; r < nv; ++r) {
                Scalar w = v.v.get(j * nv + r, col);
                if (!w.is_zero()) out.set(r, col, out.get(r, col) + c * w);
            }
        }
    return out;
}

inline void check_corep(const Hopf& a, const Corep& v) {
    int nv = v.dim, na = a.dim();
    const FieldPtr& fld = a.field();
    Mat iv = Mat::identity(nv, fld);
    if (v.v.rows() != na * nv || v.v.cols() != nv)
        throw EngineError("V-not-corepresentation", "shape mismatch");
    if (!(kron(a.comult, iv) * v.v == kron(Mat::identity(na, fld), v.v) * v.v))
        throw EngineError("V-not-corepresentation", "comultiplication law fails");
    if (!(kron(a.counit, iv) * v.v == iv))
        throw EngineError("V-not-corepresentation", "counit law fails");
    // invertibility: (S (x) id)(V) is a left inverse, sliced through every
    // dual basis functional via the dual comultiplication
    Hopf dual = dual_hopf(a);
    for (int j = 0; j < na; ++j) {
        Mat lhs(nv, nv, fld);
        for (int k = 0; k < na; ++k)
            for (int l = 0; l < na; ++l) {
                Scalar c = a.alg.mult.get(j, k * na + l);
                if (c.is_zero()) continue;
                lhs = lhs + c * (corep_rep(a, v, a.antipode.transpose() * dual.basis(k)) *
                                 corep_rep(a, v, dual.basis(l)));
            }
        // (e_j^* (x) id)(1_A (x) 1) = e_j^*(1_A) id
        Scalar at_unit = (Mat::unit_column(na, j, fld).transpose() * a.alg.unit).get(0, 0);
        if (!(lhs == at_unit * Mat::identity(nv, fld)))
            throw EngineError("V-not-corepresentation", "no antipode inverse");
    }
}

// the dual module on H_V: xi <| omega = pi_V(S-hat(omega)) xi
inline RightModule corep_module(const Hopf& a, const Corep& v) {
    Hopf dual = dual_hopf(a);
    RightModule m;
    m.dim = v.dim;
    m.hdim = a.dim();
    m.field = a.field();
    m.act = Mat(v.dim, v.dim * a.dim(), a.field());
    for (int j = 0; j < a.dim(); ++j) {
        Mat op = corep_rep(a, v, dual.antipode * dual.basis(j));
        for (int r = 0; r < v.dim; ++r)
            for (int c = 0; c < v.dim; ++c) {
                Scalar s = op.get(r, c);
                if (!s.is_zero()) m.act.set(r, c * a.dim() + j, s);
            }
    }
    return m;
}

// The twist of a Fredholm module by a corepresentation V:
//   (id (x) pi, H_V (x) H, 1 (x) F, 1 (x) gamma, U_13 V_12)
// over B(H_V) (x) B with the conjugated coaction.  The induced dual action
// is checked against the canonical action on End(H_V) (x) B.
inline EquivariantFredholmModule v_twist(const EquivariantFredholmModule& fm, const Corep& v) {
    check_corep(fm.co.a, v);
    const Hopf& a = fm.co.a;
    Hopf dual = dual_hopf(a);
    const FieldPtr& fld = fm.co.b.field;
    int na = a.dim(), nb = fm.co.b.dim, nv = v.dim, d = fm.dim;

    EquivariantFredholmModule out;
    out.co.a = a;
    out.co.star = fm.co.star;
    out.co.b = tensor_algebra(matrix_algebra(nv, fld), fm.co.b);
    int nb2 = out.co.b.dim;

    // alpha~(E_su (x) b) = sum S(V_ms) b_(-1) V_ul (x) E_ml (x) b_(0)
    out.co.alpha = Mat(na * nb2, nb2, fld);
    auto v_entry = [&](int row, int col) { // V_{row,col} as an element of A
        Mat e(na, 1, fld);
        for (int j = 0; j < na; ++j) {
            Scalar s = v.v.get(j * nv + row, col);
            if (!s.is_zero()) e.set(j, 0, s);
        }
        return e;
    };
    for (int s = 0; s < nv; ++s)
        for (int u = 0; u < nv; ++u)
            for (int b = 0; b < nb; ++b) {
                int col = (s * nv + u) * nb + b;
                for (int i = 0; i < na; ++i)
                    for (int k = 0; k < nb; ++k) {
                        Scalar c = fm.co.alpha.get(i * nb + k, b);
                        if (c.is_zero()) continue;
                        for (int m = 0; m < nv; ++m)
                            for (int l = 0; l < nv; ++l) {
                                Mat aval = a.alg.product(
                                    a.alg.product(a.antipode * v_entry(m, s),
                                                  Mat::unit_column(na, i, fld)),
                                    v_entry(u, l));
                                for (int j = 0; j < na; ++j) {
                                    Scalar w = c * aval.get(j, 0);
                                    if (w.is_zero()) continue;
                                    int row = j * nb2 + (m * nv + l) * nb + k;
                                    out.co.alpha.set(row, col, out.co.alpha.get(row, col) + w);
                                }
                            }
                    }
            }

    out.dim = nv * d;
    out.f = kron(Mat::identity(nv, fld), fm.f);
    out.gamma = kron(Mat::identity(nv, fld), fm.gamma);

    out.pi = Mat(out.dim * out.dim, nb2, fld);
    for (int s = 0; s < nv; ++s)
        for (int u = 0; u < nv; ++u) {
            Mat e_su(nv, nv, fld);
            e_su.set(s, u, Scalar::one(fld));
            for (int b = 0; b < nb; ++b) {
                Mat op = kron(e_su, fm_pi(fm, fm.co.b.basis(b)));
                Mat col = detail::vec_op(op);
                int j = (s * nv + u) * nb + b;
                for (int i = 0; i < col.rows(); ++i) {
                    Scalar w = col.get(i, 0);
                    if (!w.is_zero()) out.pi.set(i, j, w);
                }
            }
        }

    // pi_U~(w) = sum kron(pi_V(w_(1)), pi_U(w_(0)))
    out.pi_u = Mat(out.dim * out.dim, na, fld);
    for (int j = 0; j < na; ++j) {
        Mat op(out.dim, out.dim, fld);
        for (int k = 0; k < na; ++k)
            for (int l = 0; l < na; ++l) {
                Scalar c = a.alg.mult.get(j, k * na + l);
                if (c.is_zero()) continue;
                op = op + c * kron(corep_rep(a, v, dual.basis(l)), fm_pi_u(fm, dual.basis(k)));
            }
        Mat col = detail::vec_op(op);
        for (int i = 0; i < col.rows(); ++i) {
            Scalar w = col.get(i, 0);
            if (!w.is_zero()) out.pi_u.set(i, j, w);
        }
    }

    // the induced dual action must coincide with the canonical action on
    // End(H_V) (x) B built from xi <| w = pi_V(S-hat w) xi
    RightModule canonical = endx_tensor_b(dual, corep_module(a, v), induced_module(fm.co));
    RightModule induced = induced_module(out.co);
    if (!(canonical.act == induced.act))
        throw EngineError("internal", "twisted coaction does not match the canonical action");
    return out;
}

// ---------------------------------------------------------------------------
// The index theorem

// (Ind_F p)(w) = <[phi_F], [p]>(w) for the V-twist of the module, where p is
// an invariant idempotent in End(H_V) (x) B.
inline VerifyReport index_theorem_check(const EquivariantFredholmModule& fm,
                                        const EquivariantComplex& e, const Corep& v,
                                        const Mat& p_elem, int n) {
    VerifyReport r;
    EquivariantFredholmModule fm2 = v_twist(fm, v);
    Mat geometric = ind_f(fm2, p_elem).coords;
    Hopf dual = dual_hopf(fm.co.a);
    ModuleAlgebra ma = induced_module_algebra(fm.co);
    InvariantIdempotent p = check_idempotent(dual, corep_module(fm.co.a, v), ma, p_elem);
    Mat f = phi_f(fm, e, n);
    Mat algebraic = pair_even(e, f, 2 * n, p).coords;
    r.require(geometric == algebraic, "index character equals the cocycle pairing");
    return r;
}

} // namespace eqcyc
