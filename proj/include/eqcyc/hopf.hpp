// Hopf algebra presentations: comultiplication, counit, antipode on top of
// an Algebra, plus duality, group-like enumeration and integrals.

#pragma once

#include "wedderburn.hpp"

namespace eqcyc {

struct Hopf {
    Algebra alg;
    Mat comult;      // dim^2 x dim
    Mat counit;      // 1 x dim
    Mat antipode;    // dim x dim
    Mat antipode_inv;

    int dim() const { return alg.dim; }
    const FieldPtr& field() const { return alg.field; }
    Mat basis(int i) const { return alg.basis(i); }
};

inline VerifyReport verify_hopf(const Hopf& h) {
    VerifyReport r = verify_algebra(h.alg);
    int n = h.dim();
    const FieldPtr& f = h.field();
    Mat I = Mat::identity(n, f);
    r.require(h.comult.rows() == n * n && h.comult.cols() == n, "comult shape");
    r.require(h.counit.rows() == 1 && h.counit.cols() == n, "counit shape");
    if (!r.ok) return r;
    r.require(kron(h.comult, I) * h.comult == kron(I, h.comult) * h.comult, "coassociativity");
    r.require(kron(h.counit, I) * h.comult == I, "left counit law");
    r.require(kron(I, h.counit) * h.comult == I, "right counit law");
    // comult and counit are algebra maps
    Mat mid = tensor_permutation({n, n, n, n}, {0, 2, 1, 3}, f);
    Mat mm = kron(h.alg.mult, h.alg.mult) * mid; // mult on H (x) H
    r.require(h.comult * h.alg.mult == mm * kron(h.comult, h.comult), "comult multiplicative");
    r.require(h.comult * h.alg.unit == kron(h.alg.unit, h.alg.unit), "comult unital");
    r.require(h.counit * h.alg.mult == kron(h.counit, h.counit), "counit multiplicative");
    r.require((h.counit * h.alg.unit).is_identity(), "counit unital");
    // antipode law
    Mat ue = h.alg.unit * h.counit;
    r.require(h.alg.mult * kron(h.antipode, I) * h.comult == ue, "left antipode law");
    r.require(h.alg.mult * kron(I, h.antipode) * h.comult == ue, "right antipode law");
    r.require(h.antipode * h.antipode_inv == I && h.antipode_inv * h.antipode == I,
              "antipode inverse");
    return r;
}

inline int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Iterated comultiplication: delta_n maps H -> H^{(x)(n+1)}, delta_0 = id.
inline Mat delta_n(const Hopf& h, int n) {
    int d = h.dim();
    Mat out = Mat::identity(d, h.field());
    int copies = 1;
    for (int k = 0; k < n; ++k) {
        // apply comult to the last factor
        Mat step = kron(Mat::identity(ipow(d, copies - 1), h.field()), h.comult);
        out = step * out;
        ++copies;
    }
    return out;
}

// Dual Hopf algebra in the dual basis: structure maps are transposes.
inline Hopf dual_hopf(const Hopf& h) {
    Hopf d;
    d.alg.dim = h.dim();
    d.alg.field = h.field();
    d.alg.mult = h.comult.transpose();
    d.alg.unit = h.counit.transpose();
    d.comult = h.alg.mult.transpose();
    d.counit = h.alg.unit.transpose();
    d.antipode = h.antipode.transpose();
    d.antipode_inv = h.antipode_inv.transpose();
    for (int i = 0; i < d.alg.dim; ++i) d.alg.names.push_back(h.alg.name_of(i) + "^");
    return d;
}

struct GroupLikes {
    std::vector<Mat> elements; // columns rho with comult(rho) = rho (x) rho, counit(rho)=1
    bool complete = true;      // false when a dual block resisted splitting
};

// Group-likes of H = algebra characters of the dual algebra D, found as the
// one-dimensional blocks of D modulo its radical.
inline GroupLikes group_likes(const Hopf& h) {
    Hopf d = dual_hopf(h);
    Algebra dal = d.alg;
    Mat rad = radical_basis(dal);
    Algebra sem = dal;
    Mat proj = Mat::identity(dal.dim, dal.field);
    if (rad.cols() > 0) {
        auto [q, p] = quotient_algebra(dal, rad);
        sem = q;
        proj = p;
    }
    GroupLikes out;
    Wedderburn w = wedderburn_blocks(sem);
    if (!w.semisimple) throw EngineError("internal", "radical quotient not semisimple");
    if (!w.all_split) out.complete = false;
    for (const auto& blk : w.blocks) {
        if (!blk.split || blk.size != 1) continue;
        // character chi(x) defined by (proj x) e = chi(x) e for the block line e
        Mat e = blk.central_idempotent;
        Mat rho(h.dim(), 1, h.field());
        bool ok = true;
        for (int j = 0; j < dal.dim; ++j) {
            Mat prod = sem.product(proj * dal.basis(j), e);
            auto c = solve(e, prod);
            if (!c) {
                ok = false;
                break;
            }
            rho.set(j, 0, c->get(0, 0));
        }
        if (!ok) continue;
        // rho lives in H (dual basis of the dual); certify group-likeness
        if (h.comult * rho == kron(rho, rho) && (h.counit * rho).is_identity())
            out.elements.push_back(rho);
        else
            out.complete = false;
    }
    // deterministic order, largest leading coordinates first: puts the unit
    // of a group-algebra-like presentation at the front
    std::sort(out.elements.begin(), out.elements.end(), [](const Mat& a, const Mat& b) {
        for (int i = 0; i < a.rows(); ++i) {
            Scalar x = a.get(i, 0), y = b.get(i, 0);
            if (x == y) continue;
            return x.coords() > y.coords();
        }
        return false;
    });
    return out;
}

struct Integral {
    Mat element;     // dim x 1, right integral: x * el = counit(x) el... see below
    bool normalized; // counit(element) == 1 after scaling
};

// Right integral: eta with eta x = counit(x) eta for all x.  Normalized by
// counit when possible; otherwise `normalized` is false and the element is
// scaled to have first nonzero coordinate 1.
inline std::optional<Integral> right_integral(const Hopf& h) {
    int n = h.dim();
    const FieldPtr& f = h.field();
    Mat stacked(0, n, f);
    for (int j = 0; j < n; ++j) {
        Mat rj = h.alg.rmul(h.basis(j)); // eta -> eta x_j
        Mat cond = rj - (h.counit * h.basis(j)).get(0, 0) * Mat::identity(n, f);
        stacked = stacked.rows() == 0 ? cond : vstack(stacked, cond);
    }
    Mat k = kernel_basis(stacked);
    if (k.cols() == 0) return std::nullopt;
    Mat eta = k.column(0);
    Scalar eps = (h.counit * eta).get(0, 0);
    Integral out;
    if (!eps.is_zero()) {
        out.element = eps.inverse() * eta;
        out.normalized = true;
    } else {
        for (int i = 0; i < n; ++i)
            if (!eta.get(i, 0).is_zero()) {
                eta = eta.get(i, 0).inverse() * eta;
                break;
            }
        out.element = eta;
        out.normalized = false;
    }
    return out;
}

} // namespace eqcyc
