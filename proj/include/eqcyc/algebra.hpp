// Structure-constant presentations of finite-dimensional unital algebras.
//
// mult is a (dim x dim^2) matrix sending e_i (x) e_j |-> e_i e_j in the
// row-major tensor basis; unit is a (dim x 1) column.

#pragma once

#include "matrix.hpp"

#include <string>
#include <vector>

namespace eqcyc {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

struct Algebra {
    int dim = 0;
    FieldPtr field;
    Mat mult; // dim x dim^2
    Mat unit; // dim x 1
    std::vector<std::string> names;

    Mat id(int copies = 1) const {
        int n = 1;
        for (int i = 0; i < copies; ++i) n *= dim;
        return Mat::identity(n, field);
    }

    Mat basis(int i) const { return Mat::unit_column(dim, i, field); }

    // Left/right multiplication operators by a column vector x.
    Mat lmul(const Mat& x) const { return mult * kron(x, Mat::identity(dim, field)); }
    Mat rmul(const Mat& x) const { return mult * kron(Mat::identity(dim, field), x); }

    Mat product(const Mat& x, const Mat& y) const { return mult * kron(x, y); }

    std::string name_of(int i) const {
        return i < static_cast<int>(names.size()) ? names[i] : "e" + std::to_string(i);
    }
};

inline VerifyReport verify_algebra(const Algebra& a) {
    VerifyReport r;
    Mat I = Mat::identity(a.dim, a.field);
    r.require(a.mult.rows() == a.dim && a.mult.cols() == a.dim * a.dim, "mult shape");
    r.require(a.unit.rows() == a.dim && a.unit.cols() == 1, "unit shape");
    if (!r.ok) return r;
    r.require(a.mult * kron(a.mult, I) == a.mult * kron(I, a.mult), "associativity");
    r.require(a.mult * kron(a.unit, I) == I, "left unit law");
    r.require(a.mult * kron(I, a.unit) == I, "right unit law");
    return r;
}

// ---------------------------------------------------------------------------
// Constructions

inline Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Algebra t;
    t.dim = a.dim * b.dim;
    t.field = a.field;
    // (a1 b1)(a2 b2): permute (a1,b1,a2,b2) -> (a1,a2,b1,b2) then m_a (x) m_b
    Mat p = tensor_permutation({a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3}, a.field);
    t.mult = kron(a.mult, b.mult) * p;
    t.unit = kron(a.unit, b.unit);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            t.names.push_back(a.name_of(i) + "*" + b.name_of(j));
    return t;
}

// Full matrix algebra Mat_n with basis E_ij at index i*n+j.
inline Algebra matrix_algebra(int n, const FieldPtr& f = Field::rationals()) {
    Algebra a;
    a.dim = n * n;
    a.field = f;
    a.mult = Mat(a.dim, a.dim * a.dim, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // E_ij E_jk = E_ik
                int lhs = i * n + j, rhs = j * n + k;
                a.mult.set(i * n + k, lhs * a.dim + rhs, Scalar::one(f));
            }
    a.unit = Mat(a.dim, 1, f);
    for (int i = 0; i < n; ++i) a.unit.set(i * n + i, 0, Scalar::one(f));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.names.push_back("E" + std::to_string(i) + std::to_string(j));
    return a;
}

// One-dimensional algebra over f (the ground field as an algebra).
inline Algebra scalar_algebra(const FieldPtr& f = Field::rationals()) {
    Algebra a;
    a.dim = 1;
    a.field = f;
    a.mult = Mat::identity(1, f);
    a.unit = Mat::identity(1, f);
    a.names = {"1"};
    return a;
}

// Group algebra of a finite group given by its multiplication table
// table[i][j] = index of g_i g_j, with table[0][j] = j (identity first).
inline Algebra group_algebra(const std::vector<std::vector<int>>& table,
                             const std::vector<std::string>& names = {},
                             const FieldPtr& f = Field::rationals()) {
    int n = static_cast<int>(table.size());
    Algebra a;
    a.dim = n;
    a.field = f;
    a.mult = Mat(n, n * n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.mult.set(table[i][j], i * n + j, Scalar::one(f));
    a.unit = Mat::unit_column(n, 0, f);
    a.names = names;
    return a;
}

// Function algebra on a finite set (pointwise product of delta functions).
inline Algebra function_algebra(int n, const std::vector<std::string>& names = {},
                                const FieldPtr& f = Field::rationals()) {
    Algebra a;
    a.dim = n;
    a.field = f;
    a.mult = Mat(n, n * n, f);
    for (int i = 0; i < n; ++i) a.mult.set(i, i * n + i, Scalar::one(f));
    a.unit = Mat(n, 1, f);
    for (int i = 0; i < n; ++i) a.unit.set(i, 0, Scalar::one(f));
    a.names = names;
    return a;
}

// ---------------------------------------------------------------------------
// Structure of an algebra

// Gram matrix of the trace form (x,y) -> tr(L_x L_y); its kernel is the
// radical in characteristic zero.
inline Mat trace_form(const Algebra& a) {
    std::vector<Mat> L(a.dim);
    for (int i = 0; i < a.dim; ++i) L[i] = a.lmul(a.basis(i));
    Mat g(a.dim, a.dim, a.field);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j <= i; ++j) {
            Scalar t = (L[i] * L[j]).trace();
            g.set(i, j, t);
            g.set(j, i, t);
        }
    return g;
}

inline Mat radical_basis(const Algebra& a) { return kernel_basis(trace_form(a)); }

inline bool is_semisimple(const Algebra& a) { return radical_basis(a).cols() == 0; }

// Basis of the center as matrix columns.
inline Mat center_basis(const Algebra& a) {
    Mat stacked(0, a.dim, a.field);
    for (int i = 0; i < a.dim; ++i) {
        Mat x = a.basis(i);
        stacked = stacked.rows() == 0 ? a.lmul(x) - a.rmul(x)
                                      : vstack(stacked, a.lmul(x) - a.rmul(x));
    }
    return kernel_basis(stacked);
}

// Restrict an algebra to a multiplicatively closed subspace given by an
// inclusion matrix v (dim x k, columns a basis).  Throws if not closed or
// the unit is absent.
inline Algebra subalgebra(const Algebra& a, const Mat& v,
                          const std::vector<std::string>& names = {}) {
    int k = v.cols();
    auto m = solve(v, a.mult * kron(v, v));
    if (!m) throw EngineError("not-closed", "subspace is not closed under multiplication");
    auto u = solve(v, a.unit);
    if (!u) throw EngineError("not-unital", "subspace does not contain the unit");
    Algebra s;
    s.dim = k;
    s.field = a.field;
    s.mult = *m;
    s.unit = *u;
    s.names = names;
    return s;
}

// Quotient by a two-sided ideal given by an inclusion matrix.  Returns the
// quotient algebra plus the projection map (q.dim x a.dim).
inline std::pair<Algebra, Mat> quotient_algebra(const Algebra& a, const Mat& ideal) {
    // complement basis: extend ideal columns to a basis, deterministically
    Echelon e = rref(ideal.transpose());
    std::vector<int> free_rows;
    {
        size_t pi = 0;
        for (int r0 = 0; r0 < a.dim; ++r0) {
            if (pi < e.pivots.size() && e.pivots[pi] == r0)
                ++pi;
            else
                free_rows.push_back(r0);
        }
    }
    int q = static_cast<int>(free_rows.size());
    // projection: kill the ideal, keep complement coordinates.  Writing x in
    // the (ideal, complement-unit-vector) basis, proj takes the complement part.
    Mat basis_change(a.dim, a.dim, a.field); // columns: ideal basis then unit vectors
    for (int j = 0; j < ideal.cols(); ++j)
        for (int i = 0; i < a.dim; ++i) {
            Scalar v = ideal.get(i, j);
            if (!v.is_zero()) basis_change.set(i, j, v);
        }
    for (int j = 0; j < q; ++j)
        basis_change.set(free_rows[j], ideal.cols() + j, Scalar::one(a.field));
    auto inv = solve(basis_change, Mat::identity(a.dim, a.field));
    if (!inv) throw EngineError("internal", "ideal basis not independent");
    Mat proj = inv->rows_slice(ideal.cols(), q); // q x dim
    Mat sect(a.dim, q, a.field);                 // section: unit vectors
    for (int j = 0; j < q; ++j) sect.set(free_rows[j], j, Scalar::one(a.field));
    Algebra out;
    out.dim = q;
    out.field = a.field;
    out.mult = proj * a.mult * kron(sect, sect);
    out.unit = proj * a.unit;
    return {out, proj};
}

} // namespace eqcyc
