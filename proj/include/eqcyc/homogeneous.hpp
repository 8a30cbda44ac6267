// Finite quantum homogeneous spaces.  A surjective Hopf map P: A -> A0 onto a
// "subgroup" induces the right coaction Delta_R = (id (x) P) Delta; the
// quotient algebra is the fixed-point subalgebra B = A^{Delta_R}.  This header
// builds B together with the conditional expectation E = (id (x) phi0) Delta_R,
// one spectral module X_t = (H_t (x) A)^{delta_t} per irreducible class t of
// A0, and the decomposition machinery that writes any equivariant module as a
// certified direct sum of the X_t.

#pragma once

#include "fredholm.hpp"
#include "ktheory.hpp"

namespace eqcyc {

// A surjection of finite quantum groups given by its matrix P: A -> A0.
struct SubgroupDatum {
    Hopf a;
    Hopf a0;
    Mat p; // dim(A0) x dim(A)
};

inline VerifyReport verify_subgroup(const SubgroupDatum& sd) {
    VerifyReport r = verify_hopf(sd.a);
    VerifyReport r0 = verify_hopf(sd.a0);
    for (const auto& m : r0.failures) r.require(false, "A0: " + m);
    r.ok = r.ok && r0.ok;
    int na = sd.a.dim(), n0 = sd.a0.dim();
    r.require(sd.p.rows() == n0 && sd.p.cols() == na, "P shape");
    if (!r.ok) return r;
    r.require(kron(sd.p, sd.p) * sd.a.comult == sd.a0.comult * sd.p,
              "(P (x) P) Delta = Delta0 P");
    r.require(sd.a0.counit * sd.p == sd.a.counit, "eps0 P = eps");
    r.require(sd.p * sd.a.antipode == sd.a0.antipode * sd.p, "P S = S0 P");
    r.require(sd.p * sd.a.alg.mult == sd.a0.alg.mult * kron(sd.p, sd.p), "P multiplicative");
    r.require(sd.p * sd.a.alg.unit == sd.a0.alg.unit, "P unital");
    r.require(column_space(sd.p).cols() == n0, "P surjective");
    return r;
}

// The invariant integral of a finite quantum group as a functional on A0:
// the unique phi0 with (id (x) phi0) Delta0 = phi0(.) 1 = (phi0 (x) id) Delta0
// and phi0(1) = 1.  Throws "no-haar-functional" when no normalized invariant
// functional exists.
inline Mat haar_functional(const Hopf& a0) {
    int n = a0.dim();
    const FieldPtr& f = a0.field();
    // Linear conditions on the coordinate vector h of phi0.  Right invariance
    // reads sum_l Delta0(e_j)_{k,l} h_l = h_j unit_k for all (k, j); left
    // invariance swaps the contracted tensor leg.
    Mat sys(2 * n * n, n, f);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                Scalar right = a0.comult.get(k * n + l, j);
                Scalar left = a0.comult.get(l * n + k, j);
                if (l == j) {
                    right = right - a0.alg.unit.get(k, 0);
                    left = left - a0.alg.unit.get(k, 0);
                }
                if (!right.is_zero()) sys.set(k * n + j, l, right);
                if (!left.is_zero()) sys.set(n * n + k * n + j, l, left);
            }
    Mat sol = kernel_basis(sys);
    for (int c = 0; c < sol.cols(); ++c) {
        Mat h = sol.column(c);
        Scalar at_one = (h.transpose() * a0.alg.unit).get(0, 0);
        if (!at_one.is_zero()) return at_one.inverse() * h;
    }
    throw EngineError("no-haar-functional",
                      "no invariant functional with phi0(1) != 0 exists on A0");
}

// The quotient space of a subgroup datum: the algebra B = A^{Delta_R} with its
// left coaction alpha = Delta|_B and the conditional expectation E onto B.
struct QuotientSpace {
    Mat delta_r; // (dim A * dim A0) x dim A
    Mat incl;    // dim A x dim B, basis of B inside A
    Algebra b;   // B in the incl coordinates
    Mat alpha;   // (dim A * dim B) x dim B, Delta restricted to B
    Mat phi0;    // dim A0 x 1, invariant functional on A0
    Mat e;       // dim A x dim A, conditional expectation onto B
};

inline QuotientSpace quotient(const SubgroupDatum& sd) {
    int na = sd.a.dim();
    const FieldPtr& f = sd.a.field();
    Mat ia = Mat::identity(na, f);
    QuotientSpace q;
    q.delta_r = kron(ia, sd.p) * sd.a.comult;
    // B = { a : Delta_R(a) = a (x) 1 }
    q.incl = kernel_basis(q.delta_r - kron(ia, sd.a0.alg.unit));
    q.b = subalgebra(sd.a.alg, q.incl);
    auto al = solve(kron(ia, q.incl), sd.a.comult * q.incl);
    if (!al) throw EngineError("internal", "Delta(B) is not contained in A (x) B");
    q.alpha = *al;
    q.phi0 = haar_functional(sd.a0);
    q.e = kron(ia, q.phi0.transpose()) * q.delta_r;
    // Certify the expectation: idempotent onto B, identity on B, bimodule map.
    if (!(q.e * q.e == q.e)) throw EngineError("internal", "E is not idempotent");
    if (!(q.e * q.incl == q.incl)) throw EngineError("internal", "E does not fix B");
    if (!solve(q.incl, q.e)) throw EngineError("internal", "image of E is not inside B");
    for (int i = 0; i < q.b.dim; ++i)
        for (int j = 0; j < q.b.dim; ++j) {
            Mat lr = sd.a.alg.lmul(q.incl.column(i)) * sd.a.alg.rmul(q.incl.column(j));
            if (!(q.e * lr == lr * q.e))
                throw EngineError("internal", "E is not a B-bimodule map");
        }
    return q;
}

// All data of a homogeneous space computed once: the quotient plus the
// enumeration of irreducible classes of A0 (blocks of its dual algebra).
struct HomogeneousSpace {
    SubgroupDatum sd;
    QuotientSpace q;
    Hopf dual0;         // dual of A0
    Wedderburn classes; // blocks of dual(A0) = Irr(A0), in canonical order
};

inline HomogeneousSpace build_homogeneous(const SubgroupDatum& sd) {
    HomogeneousSpace hs{sd, quotient(sd), dual_hopf(sd.a0), {}};
    hs.classes = wedderburn_blocks(hs.dual0.alg);
    if (!hs.classes.semisimple || !hs.classes.all_split)
        throw EngineError("not-split", "the dual of A0 is not split semisimple");
    return hs;
}

// The irreducible corepresentation of A0 attached to a block of its dual:
// v_kl in A0 is the element whose pairing with any functional eta equals the
// (k,l) entry of eta's component in that matrix block.
inline Corep class_corep(const HomogeneousSpace& hs, int t) {
    if (t < 0 || t >= static_cast<int>(hs.classes.blocks.size()))
        throw EngineError("class-not-found", "no irreducible class with index " +
                                                 std::to_string(t));
    const WedderburnBlock& blk = hs.classes.blocks[t];
    int n0 = hs.sd.a0.dim(), s = blk.size;
    const FieldPtr& f = hs.sd.a0.field();
    Mat units(n0, s * s, f);
    for (int k = 0; k < s * s; ++k)
        for (int i = 0; i < n0; ++i) units.set(i, k, blk.units[k].get(i, 0));
    // component of z . e_m in the unit basis, for each dual basis functional
    auto comp = solve(units, hs.dual0.alg.lmul(blk.central_idempotent));
    if (!comp) throw EngineError("internal", "block component is not spanned by its units");
    Corep v;
    v.dim = s;
    v.v = Mat(n0 * s, s, f);
    // the engine's corepresentation layout pairs functionals contravariantly
    // (right modules act through anti-homomorphisms), hence the index swap
    for (int k = 0; k < s; ++k)
        for (int l = 0; l < s; ++l)
            for (int m = 0; m < n0; ++m) {
                Scalar c = comp->get(l * s + k, m);
                if (!c.is_zero()) v.v.set(m * s + k, l, c);
            }
    check_corep(hs.sd.a0, v);
    return v;
}

// omega |> a = (id (x) omega) Delta_R(a), the left action of the dual of A0.
inline Mat spectral_action(const HomogeneousSpace& hs, const Mat& omega) {
    int na = hs.sd.a.dim();
    return kron(Mat::identity(na, hs.sd.a.field()), omega.transpose()) * hs.q.delta_r;
}

// A spectral module: the class corepresentation V^t, the twisted coaction
// delta_t on H_t (x) A, its invariant projection E_t, the fixed points X_t,
// the spectral subspace A_t, and the solved left-B-module generation witness.
struct SpectralModule {
    int t = 0;
    int s = 0;        // dim H_t
    Corep vt;         // corepresentation of A0 for class t
    Mat a_t_basis;    // dim A x dim A_t
    Mat delta_t;      // (s * dim A * dim A0) x (s * dim A)
    Mat e_t;          // (s * dim A) x (s * dim A)
    Mat x_basis;      // (s * dim A) x dim X_t
    Mat generators;   // dim A x g: left-B-module generators of A_t
    Mat coefficients; // (g * dim B) x dim A_t: solved witness sum_i c_i g_i = a
};

// The right action of the dual of A on H (x) A induced by a (x) xi (x) 1 |->
// Delta(a)_{13}-style equivariance: trivial on the H leg, regular on A.
inline RightModule regular_tensor_module(const Hopf& a, int s) {
    Hopf dual = dual_hopf(a);
    FiniteCoaction reg{a, a.alg, a.comult, false};
    return tensor_module(dual, trivial_module(dual, s), induced_module(reg));
}

inline SpectralModule spectral_subspace(const HomogeneousSpace& hs, int t) {
    const Hopf& a = hs.sd.a;
    const Hopf& a0 = hs.sd.a0;
    int na = a.dim(), n0 = a0.dim();
    const FieldPtr& f = a.field();
    SpectralModule sm;
    sm.t = t;
    sm.vt = class_corep(hs, t);
    int s = sm.s = sm.vt.dim;

    // A_t = image of the action of the conjugate block's central idempotent
    Mat zbar = hs.dual0.antipode * hs.classes.blocks[t].central_idempotent;
    sm.a_t_basis = column_space(spectral_action(hs, zbar));

    // delta_t(xi (x) a) = V^t_{31} (xi (x) 1 (x) 1)(1 (x) Delta_R(a)):
    // e_j (x) a |-> sum_k e_k (x) a_(0) (x) v_kj a_(1)
    sm.delta_t = Mat(s * na * n0, s * na, f);
    // here v_kj is needed in the covariant layout Delta0(v_kj) = sum_m
    // v_km (x) v_mj, which is the stored array with both indices swapped
    for (int k = 0; k < s; ++k)
        for (int j = 0; j < s; ++j) {
            Mat vkj(n0, 1, f);
            for (int m = 0; m < n0; ++m) vkj.set(m, 0, sm.vt.v.get(m * s + j, k));
            Mat lv = a0.alg.lmul(vkj);
            for (int c = 0; c < na; ++c)
                for (int m = 0; m < na; ++m)
                    for (int rp = 0; rp < n0; ++rp) {
                        Scalar d = hs.q.delta_r.get(m * n0 + rp, c);
                        if (d.is_zero()) continue;
                        for (int r = 0; r < n0; ++r) {
                            Scalar lvv = lv.get(r, rp);
                            if (!lvv.is_zero())
                                sm.delta_t.set((k * na + m) * n0 + r, j * na + c,
                                               sm.delta_t.get((k * na + m) * n0 + r,
                                                              j * na + c) +
                                                   d * lvv);
                        }
                    }
        }

    // E_t = (id (x) phi0) delta_t, idempotent with image X_t
    Mat isna = Mat::identity(s * na, f);
    sm.e_t = kron(isna, hs.q.phi0.transpose()) * sm.delta_t;
    if (!(sm.e_t * sm.e_t == sm.e_t)) throw EngineError("internal", "E_t is not idempotent");
    sm.x_basis = column_space(sm.e_t);
    // X_t is exactly the fixed-point space of delta_t
    Mat fixed = kernel_basis(sm.delta_t - kron(isna, a0.alg.unit));
    if (!solve(fixed, sm.x_basis) || !solve(sm.x_basis, fixed))
        throw EngineError("internal", "image of E_t is not the fixed-point space of delta_t");
    // E_t intertwines the equivariance structure (the dual action of A)
    RightModule eq = regular_tensor_module(a, s);
    for (int j = 0; j < na; ++j)
        if (!(sm.e_t * eq.act_by(a.basis(j)) == eq.act_by(a.basis(j)) * sm.e_t))
            throw EngineError("internal", "E_t does not intertwine the equivariance structure");
    // X_t is closed under right multiplication by B, and sits in H_t (x) A_t
    for (int i = 0; i < hs.q.b.dim; ++i) {
        Mat rb = kron(Mat::identity(s, f), a.alg.rmul(hs.q.incl.column(i)));
        if (!solve(sm.x_basis, rb * sm.x_basis))
            throw EngineError("internal", "X_t is not closed under the B-action");
    }
    if (!solve(kron(Mat::identity(s, f), sm.a_t_basis), sm.x_basis))
        throw EngineError("internal", "X_t is not contained in H_t (x) A_t");

    // Finite-generation witness: a greedy generating set for A_t as a left
    // B-module, with solved coefficients certified per basis element.
    int db = hs.q.b.dim, kat = sm.a_t_basis.cols();
    Mat gens(na, 0, f);
    Mat span(na, 0, f); // columns: b_i * g_j for the current generators
    for (int c = 0; c < kat; ++c) {
        Mat col = sm.a_t_basis.column(c);
        if (span.cols() > 0 && solve(span, col)) continue;
        gens = gens.cols() == 0 ? col : hstack(gens, col);
        Mat block(na, db, f);
        for (int i = 0; i < db; ++i) {
            Mat prod = a.alg.product(hs.q.incl.column(i), col);
            for (int r = 0; r < na; ++r) block.set(r, i, prod.get(r, 0));
        }
        span = span.cols() == 0 ? block : hstack(span, block);
    }
    sm.generators = gens;
    auto coeff = solve(span, sm.a_t_basis);
    if (!coeff) throw EngineError("internal", "A_t generation witness failed to solve");
    sm.coefficients = *coeff;
    // re-certify the witness element by element
    for (int c = 0; c < kat; ++c) {
        Mat acc(na, 1, f);
        for (int g = 0; g < gens.cols(); ++g)
            for (int i = 0; i < db; ++i) {
                Scalar cf = sm.coefficients.get(g * db + i, c);
                if (!cf.is_zero())
                    acc = acc + cf * a.alg.product(hs.q.incl.column(i), gens.column(g));
            }
        if (!(acc == sm.a_t_basis.column(c)))
            throw EngineError("internal", "A_t generation witness does not reproduce a basis element");
    }
    return sm;
}

// --------------------------------------------------------------------------
// The crossed product B x| A-hat and the spectral modules X_t as modules over
// it.  Each X_t lands in exactly one matrix block; this labels the blocks.

namespace detail {

// Restrict a module to an invariant subspace given by a column basis.
inline RightModule restrict_module(const RightModule& m, const Mat& basis) {
    RightModule out;
    out.dim = basis.cols();
    out.hdim = m.hdim;
    out.field = m.field;
    out.act = Mat(out.dim, out.dim * m.hdim, m.field);
    for (int j = 0; j < m.hdim; ++j) {
        Mat omega = Mat::unit_column(m.hdim, j, m.field);
        auto small = solve(basis, m.act_by(omega) * basis);
        if (!small) throw EngineError("internal", "subspace is not invariant");
        for (int r = 0; r < out.dim; ++r)
            for (int c = 0; c < out.dim; ++c) {
                Scalar v = small->get(r, c);
                if (!v.is_zero()) out.act.set(r, c * m.hdim + j, v);
            }
    }
    return out;
}

inline RightModule direct_sum(const RightModule& x, const RightModule& y) {
    RightModule out;
    out.dim = x.dim + y.dim;
    out.hdim = x.hdim;
    out.field = x.field;
    out.act = Mat(out.dim, out.dim * out.hdim, x.field);
    for (int j = 0; j < out.hdim; ++j) {
        for (int r = 0; r < x.dim; ++r)
            for (int c = 0; c < x.dim; ++c) {
                Scalar v = x.act.get(r, c * x.hdim + j);
                if (!v.is_zero()) out.act.set(r, c * out.hdim + j, v);
            }
        for (int r = 0; r < y.dim; ++r)
            for (int c = 0; c < y.dim; ++c) {
                Scalar v = y.act.get(r, c * y.hdim + j);
                if (!v.is_zero()) out.act.set(x.dim + r, (x.dim + c) * out.hdim + j, v);
            }
    }
    return out;
}

} // namespace detail

struct CrossedData {
    Hopf dual;                    // the dual of A, acting on B
    ModuleAlgebra bm;             // B with the induced dual action
    CrossedProduct cp;            // B x| A-hat
    Wedderburn blocks;            // its block decomposition
    std::vector<RightModule> xt;  // X_t as modules over cp.alg
    std::vector<int> block_of;    // class t -> block index of cp
};

inline CrossedData crossed_blocks(const HomogeneousSpace& hs) {
    const Hopf& a = hs.sd.a;
    int na = a.dim();
    const FieldPtr& f = a.field();
    CrossedData cd;
    cd.dual = dual_hopf(a);
    FiniteCoaction cob{a, hs.q.b, hs.q.alpha, false};
    cd.bm = induced_module_algebra(cob);
    cd.cp = crossed_product(cd.dual, cd.bm);
    cd.blocks = wedderburn_blocks(cd.cp.alg);
    if (!cd.blocks.semisimple || !cd.blocks.all_split)
        throw EngineError("not-split", "the crossed product is not split semisimple");
    size_t nt = hs.classes.blocks.size();
    if (cd.blocks.blocks.size() != nt)
        throw EngineError("internal",
                          "crossed product block count differs from the class count");
    // X_t as a module over B x| A-hat: right B-multiplication on the A leg,
    // dual action through the equivariance structure, restricted to X_t.
    cd.block_of.assign(nt, -1);
    std::vector<bool> used(nt, false);
    for (size_t t = 0; t < nt; ++t) {
        SpectralModule sm = spectral_subspace(hs, static_cast<int>(t));
        RightModule eq = regular_tensor_module(a, sm.s);
        RightModule big;
        big.dim = sm.s * na;
        big.hdim = cd.cp.alg.dim;
        big.field = f;
        big.act = Mat(big.dim, big.dim * big.hdim, f);
        for (int beta = 0; beta < hs.q.b.dim; ++beta)
            for (int j = 0; j < na; ++j) {
                Mat op = eq.act_by(a.basis(j)) *
                         kron(Mat::identity(sm.s, f), a.alg.rmul(hs.q.incl.column(beta)));
                int idx = beta * na + j;
                for (int r = 0; r < big.dim; ++r)
                    for (int c = 0; c < big.dim; ++c) {
                        Scalar v = op.get(r, c);
                        if (!v.is_zero()) big.act.set(r, c * big.hdim + idx, v);
                    }
            }
        cd.xt.push_back(detail::restrict_module(big, sm.x_basis));
        // the multiplicity vector of X_t must be a coordinate vector: one block
        for (size_t bidx = 0; bidx < nt; ++bidx) {
            int m = block_multiplicity(cd.blocks.blocks[bidx],
                                       cd.xt.back().act_by(cd.blocks.blocks[bidx].central_idempotent));
            if (m == 0) continue;
            if (m != 1 || cd.block_of[t] != -1 || used[bidx])
                throw EngineError("internal", "X_t is not a simple module of the crossed product");
            cd.block_of[t] = static_cast<int>(bidx);
            used[bidx] = true;
        }
        if (cd.block_of[t] == -1)
            throw EngineError("internal", "X_t vanishes in the crossed product");
    }
    return cd;
}

struct Decomposition {
    std::vector<int> multiplicities; // per class t
    IsoResult certificate;           // iso with the constructed direct sum
};

// Decompose a module over the crossed product as a certified sum of the X_t.
inline Decomposition decompose_module(const CrossedData& cd, const RightModule& m,
                                      unsigned seed = 0) {
    size_t nt = cd.xt.size();
    Decomposition out;
    out.multiplicities.assign(nt, 0);
    int total = 0;
    for (size_t t = 0; t < nt; ++t) {
        int bidx = cd.block_of[t];
        out.multiplicities[t] = block_multiplicity(
            cd.blocks.blocks[bidx], m.act_by(cd.blocks.blocks[bidx].central_idempotent));
        total += out.multiplicities[t] * cd.xt[t].dim;
    }
    if (total != m.dim)
        throw EngineError("decomposition-failed", "block multiplicities do not exhaust the module");
    RightModule sum;
    sum.dim = 0;
    sum.hdim = cd.cp.alg.dim;
    sum.field = cd.cp.alg.field;
    sum.act = Mat(0, 0, cd.cp.alg.field);
    bool first = true;
    for (size_t t = 0; t < nt; ++t)
        for (int c = 0; c < out.multiplicities[t]; ++c) {
            sum = first ? cd.xt[t] : detail::direct_sum(sum, cd.xt[t]);
            first = false;
        }
    if (first) { // zero module
        out.certificate = {m.dim == 0 ? "certified-iso" : "certified-noniso",
                           Mat(0, 0, cd.cp.alg.field)};
        if (m.dim != 0)
            throw EngineError("decomposition-failed", "nonzero module with zero multiplicities");
        return out;
    }
    out.certificate = iso_test(cd.cp.alg, m, sum, seed);
    if (out.certificate.verdict != "certified-iso")
        throw EngineError("decomposition-failed",
                          "no certified isomorphism with the constructed direct sum");
    return out;
}

// Decompose an equivariant module presented by a corepresentation V of A and
// an invariant idempotent p over End(H_V) (x) B.
inline Decomposition decompose_equivariant(const HomogeneousSpace& hs, const CrossedData& cd,
                                           const Corep& v, const Mat& p_elem,
                                           unsigned seed = 0) {
    check_corep(hs.sd.a, v);
    RightModule xv = corep_module(hs.sd.a, v);
    InvariantIdempotent p = check_idempotent(cd.dual, xv, cd.bm, p_elem);
    RightModule xbm = xb_crossed_module(cd.dual, cd.bm, p.x, cd.cp);
    Mat p_op = left_operator(cd.bm, xv.dim, p.elem);
    Mat basis = column_space(p_op);
    RightModule m = basis.cols() == 0
                        ? RightModule{0, cd.cp.alg.dim, cd.cp.alg.field,
                                      Mat(0, 0, cd.cp.alg.field)}
                        : detail::restrict_module(xbm, basis);
    return decompose_module(cd, m, seed);
}

} // namespace eqcyc
