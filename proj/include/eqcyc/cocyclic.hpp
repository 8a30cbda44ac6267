// Generic cocyclic-object engine: identity verification, the (b, b') x
// (1-lambda, N) bicomplex, Hochschild / cyclic / lambda / periodic
// cohomology and the periodicity operator, all as exact matrix linear
// algebra on a finite window of levels.

#pragma once

#include "algebra.hpp"

#include <sstream>

namespace eqcyc {

struct CocyclicObject {
    FieldPtr field;
    std::vector<int> dims;           // level dimensions, 0..n_max
    std::vector<Mat> t;              // t[n] : C^n -> C^n
    std::vector<std::vector<Mat>> d; // d[n][i] : C^{n-1} -> C^n, i = 0..n (n >= 1)
    std::vector<std::vector<Mat>> s; // s[n][i] : C^{n+1} -> C^n, i = 0..n (n <= n_max-1)

    int n_max() const { return static_cast<int>(dims.size()) - 1; }
};

// The point object: every level one-dimensional, all structure maps the
// identity.
inline CocyclicObject point_object(int n_max, const FieldPtr& f = Field::rationals()) {
    CocyclicObject c;
    c.field = f;
    c.dims.assign(n_max + 1, 1);
    c.t.assign(n_max + 1, Mat::identity(1, f));
    c.d.resize(n_max + 1);
    c.s.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n) c.d[n].assign(n + 1, Mat::identity(1, f));
    for (int n = 0; n < n_max; ++n) c.s[n].assign(n + 1, Mat::identity(1, f));
    return c;
}

inline VerifyReport verify_cocyclic(const CocyclicObject& c) {
    VerifyReport r;
    int nm = c.n_max();
    auto tag = [](const char* fam, int n, int i, int j) {
        std::ostringstream os;
        os << fam << " at n=" << n << " i=" << i << " j=" << j;
        return os.str();
    };
    // shapes
    for (int n = 0; n <= nm; ++n) {
        r.require(c.t[n].rows() == c.dims[n] && c.t[n].cols() == c.dims[n],
                  tag("t shape", n, -1, -1));
        if (n >= 1) {
            r.require(static_cast<int>(c.d[n].size()) == n + 1, tag("d count", n, -1, -1));
            for (int i = 0; i <= n; ++i)
                r.require(c.d[n][i].rows() == c.dims[n] && c.d[n][i].cols() == c.dims[n - 1],
                          tag("d shape", n, i, -1));
        }
        if (n < nm) {
            r.require(static_cast<int>(c.s[n].size()) == n + 1, tag("s count", n, -1, -1));
            for (int i = 0; i <= n; ++i)
                r.require(c.s[n][i].rows() == c.dims[n] && c.s[n][i].cols() == c.dims[n + 1],
                          tag("s shape", n, i, -1));
        }
    }
    if (!r.ok) return r;
    // (1) d^n_j d^{n-1}_i = d^n_i d^{n-1}_{j-1} for i < j
    for (int n = 2; n <= nm; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                r.require(c.d[n][j] * c.d[n - 1][i] == c.d[n][i] * c.d[n - 1][j - 1],
                          tag("dd", n, i, j));
    // (2) s^n_j s^{n+1}_i = s^n_i s^{n+1}_{j+1} for i <= j
    for (int n = 0; n + 2 <= nm; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                r.require(c.s[n][j] * c.s[n + 1][i] == c.s[n][i] * c.s[n + 1][j + 1],
                          tag("ss", n, i, j));
    // (3,4,5) s^n_j d^{n+1}_i
    for (int n = 0; n + 1 <= nm; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Mat lhs = c.s[n][j] * c.d[n + 1][i];
                if (i == j || i == j + 1) {
                    r.require(lhs.is_identity(), tag("sd=id", n, i, j));
                } else if (i < j) {
                    r.require(n >= 1, tag("sd range", n, i, j));
                    r.require(lhs == c.d[n][i] * c.s[n - 1][j - 1], tag("sd<", n, i, j));
                } else { // i > j + 1
                    r.require(lhs == c.d[n][i - 1] * c.s[n - 1][j], tag("sd>", n, i, j));
                }
            }
    // (6) t_n d^n_i = d^n_{i-1} t_{n-1} (i >= 1), t_n d^n_0 = d^n_n
    for (int n = 1; n <= nm; ++n) {
        r.require(c.t[n] * c.d[n][0] == c.d[n][n], tag("td0", n, 0, -1));
        for (int i = 1; i <= n; ++i)
            r.require(c.t[n] * c.d[n][i] == c.d[n][i - 1] * c.t[n - 1], tag("td", n, i, -1));
    }
    // (7) t_n s^n_i = s^n_{i-1} t_{n+1} (i >= 1), t_n s^n_0 = s^n_n t^2_{n+1}
    for (int n = 0; n + 1 <= nm; ++n) {
        r.require(c.t[n] * c.s[n][0] == c.s[n][n] * c.t[n + 1] * c.t[n + 1],
                  tag("ts0", n, 0, -1));
        for (int i = 1; i <= n; ++i)
            r.require(c.t[n] * c.s[n][i] == c.s[n][i - 1] * c.t[n + 1], tag("ts", n, i, -1));
    }
    // (8) t_n^{n+1} = id
    for (int n = 0; n <= nm; ++n) {
        Mat p = Mat::identity(c.dims[n], c.field);
        for (int k = 0; k <= n; ++k) p = c.t[n] * p;
        r.require(p.is_identity(), tag("t^{n+1}", n, -1, -1));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Derived operators

// b_n : C^{n-1} -> C^n; b_0 is the empty map into C^0.
inline Mat op_b(const CocyclicObject& c, int n) {
    if (n == 0) return Mat(c.dims[0], 0, c.field);
    Mat out = c.d[n][0];
    for (int i = 1; i <= n; ++i)
        out = (i % 2 == 0) ? out + c.d[n][i] : out - c.d[n][i];
    return out;
}

inline Mat op_bprime(const CocyclicObject& c, int n) {
    Mat out = c.d[n][0];
    for (int i = 1; i < n; ++i)
        out = (i % 2 == 0) ? out + c.d[n][i] : out - c.d[n][i];
    return out;
}

inline Mat op_lambda(const CocyclicObject& c, int n) {
    return n % 2 == 0 ? c.t[n] : -c.t[n];
}

inline Mat op_N(const CocyclicObject& c, int n) {
    Mat lam = op_lambda(c, n);
    Mat out = Mat::identity(c.dims[n], c.field);
    Mat pw = out;
    for (int i = 1; i <= n; ++i) {
        pw = lam * pw;
        out = out + pw;
    }
    return out;
}

// B_n = N^n s^n_n t_{n+1} (1 - lambda_{n+1}) : C^{n+1} -> C^n.
inline Mat op_B(const CocyclicObject& c, int n) {
    Mat one = Mat::identity(c.dims[n + 1], c.field);
    return op_N(c, n) * c.s[n][n] * c.t[n + 1] * (one - op_lambda(c, n + 1));
}

inline VerifyReport verify_derived(const CocyclicObject& c) {
    VerifyReport r;
    int nm = c.n_max();
    auto tag = [](const char* what, int n) {
        std::ostringstream os;
        os << what << " at n=" << n;
        return os.str();
    };
    for (int n = 2; n <= nm; ++n) {
        r.require((op_b(c, n) * op_b(c, n - 1)).is_zero(), tag("b^2", n));
        r.require((op_bprime(c, n) * op_bprime(c, n - 1)).is_zero(), tag("b'^2", n));
    }
    for (int n = 1; n <= nm; ++n) {
        // cochain-level compatibilities (these make the bicomplex squares
        // anticommute): (1-lambda) b = b' (1-lambda) and N b' = b N
        Mat lo = Mat::identity(c.dims[n - 1], c.field) - op_lambda(c, n - 1);
        Mat hi = Mat::identity(c.dims[n], c.field) - op_lambda(c, n);
        r.require(hi * op_b(c, n) == op_bprime(c, n) * lo, tag("(1-l)b=b'(1-l)", n));
        r.require(op_N(c, n) * op_bprime(c, n) == op_b(c, n) * op_N(c, n - 1), tag("Nb'=bN", n));
    }
    for (int n = 1; n + 1 < static_cast<int>(c.dims.size()); ++n)
        r.require((op_B(c, n - 1) * op_B(c, n)).is_zero(), tag("B^2", n));
    for (int n = 0; n + 2 <= nm; ++n)
        r.require((op_b(c, n + 1) * op_B(c, n) + op_B(c, n + 1) * op_b(c, n + 2)).is_zero(),
                  tag("bB+Bb", n));
    return r;
}

// ---------------------------------------------------------------------------
// Cohomology

struct CohomologyResult {
    std::string theory;
    int degree = 0;
    int dim = 0;
    Mat representatives; // columns, in the coordinates of the relevant complex
    bool stabilized = false;
};

namespace detail {

// ker(d_out) / im(d_in): dimension and deterministic representatives.
inline std::pair<int, Mat> cohomology_of(const Mat& d_out, const Mat& d_in) {
    Mat k = kernel_basis(d_out);
    Mat img = d_in.cols() > 0 ? column_space(d_in) : Mat(d_out.cols(), 0, d_out.field());
    int dim = k.cols() - img.cols();
    // representatives: columns of k whose pivots fall outside span(img)
    Mat reps(k.rows(), dim > 0 ? dim : 0, k.field());
    if (dim > 0) {
        // take columns of k that increase the rank over img, in order
        Mat acc = img;
        int placed = 0;
        int base_rank = rank(img);
        for (int j = 0; j < k.cols() && placed < dim; ++j) {
            Mat cand = hstack(acc, k.column(j));
            if (rank(cand) > base_rank) {
                for (int i = 0; i < k.rows(); ++i) reps.set(i, placed, k.get(i, j));
                acc = cand;
                ++base_rank;
                ++placed;
            }
        }
    }
    return {dim, reps};
}

} // namespace detail

inline CohomologyResult hochschild(const CocyclicObject& c, int n) {
    if (n < 0 || n + 1 > c.n_max())
        throw EngineError("degree-out-of-range", "hochschild needs levels up to n+1");
    auto [dim, reps] = detail::cohomology_of(op_b(c, n + 1), op_b(c, n));
    return {"hochschild", n, dim, reps, false};
}

// Total complex T^n = sum_{p=0}^{n} C^{n-p} (column p holds level n-p).
inline std::vector<int> total_offsets(const CocyclicObject& c, int n, int* total = nullptr) {
    std::vector<int> off;
    int acc = 0;
    for (int p = 0; p <= n; ++p) {
        off.push_back(acc);
        acc += c.dims[n - p];
    }
    if (total) *total = acc;
    return off;
}

// Total differential D^n : T^n -> T^{n+1}.
inline Mat total_differential(const CocyclicObject& c, int n) {
    int src_total = 0, dst_total = 0;
    auto src_off = total_offsets(c, n, &src_total);
    auto dst_off = total_offsets(c, n + 1, &dst_total);
    Mat dmat(dst_total, src_total, c.field);
    auto place = [&](const Mat& blk, int dst, int src) {
        for (int i = 0; i < blk.rows(); ++i)
            for (const auto& [j, v] : blk.row(i)) dmat.set(dst_off[dst] + i, src_off[src] + j, v);
    };
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        // vertical: column p, level q -> q+1
        Mat vert = (p % 2 == 0) ? op_b(c, q + 1) : -op_bprime(c, q + 1);
        place(vert, p, p);
        // horizontal: column p -> p+1, level q
        Mat horiz = (p % 2 == 0)
                        ? Mat::identity(c.dims[q], c.field) - op_lambda(c, q)
                        : op_N(c, q);
        place(horiz, p + 1, p);
    }
    return dmat;
}

inline CohomologyResult cyclic_total(const CocyclicObject& c, int n) {
    if (n < 0) throw EngineError("degree-out-of-range", "negative degree");
    if (n > c.n_max() - 2)
        throw EngineError("truncation-unsafe",
                          "cyclic cohomology in degree " + std::to_string(n) +
                              " needs levels beyond the computed window");
    Mat d_out = total_differential(c, n);
    Mat d_in = n > 0 ? total_differential(c, n - 1) : Mat(d_out.cols(), 0, c.field);
    auto [dim, reps] = detail::cohomology_of(d_out, d_in);
    return {"cyclic", n, dim, reps, false};
}

inline CohomologyResult lambda_cohomology(const CocyclicObject& c, int n) {
    if (n < 0 || n + 1 > c.n_max())
        throw EngineError("degree-out-of-range", "lambda cohomology needs levels up to n+1");
    // K^q = ker(1 - lambda_q); b compresses to K
    auto kbasis = [&](int q) {
        return kernel_basis(Mat::identity(c.dims[q], c.field) - op_lambda(c, q));
    };
    Mat kn = kbasis(n), kn1 = kbasis(n + 1);
    auto bout = solve(kn1, op_b(c, n + 1) * kn);
    if (!bout) throw EngineError("internal", "b does not preserve ker(1-lambda)");
    Mat bin(kn.cols(), 0, c.field);
    if (n > 0) {
        Mat km = kbasis(n - 1);
        auto s = solve(kn, op_b(c, n) * km);
        if (!s) throw EngineError("internal", "b does not preserve ker(1-lambda)");
        bin = *s;
    }
    auto [dim, reps] = detail::cohomology_of(*bout, bin);
    // report representatives in ambient level coordinates
    return {"lambda", n, dim, kn * reps, false};
}

// The periodicity operator as the column-shift chain map T^n -> T^{n+2}:
// column p of T^n lands in column p+2 of T^{n+2} (same level).
inline Mat periodicity_shift(const CocyclicObject& c, int n) {
    int src_total = 0, dst_total = 0;
    auto src_off = total_offsets(c, n, &src_total);
    auto dst_off = total_offsets(c, n + 2, &dst_total);
    Mat sh(dst_total, src_total, c.field);
    for (int p = 0; p <= n; ++p)
        for (int i = 0; i < c.dims[n - p]; ++i)
            sh.set(dst_off[p + 2] + i, src_off[p] + i, Scalar::one(c.field));
    return sh;
}

struct PeriodicityPair {
    CohomologyResult low, high;
    Mat s_matrix; // high-class coordinates of S(low representatives)
};

inline PeriodicityPair periodicity_pair(const CocyclicObject& c, int n) {
    if (n + 4 > c.n_max())
        throw EngineError("truncation-unsafe",
                          "periodicity pair at degree " + std::to_string(n) +
                              " needs a larger window");
    PeriodicityPair out;
    out.low = cyclic_total(c, n);
    out.high = cyclic_total(c, n + 2);
    Mat shifted = periodicity_shift(c, n) * out.low.representatives;
    // express modulo im D^{n+1}
    Mat din = total_differential(c, n + 1);
    Mat sysm = hstack(out.high.representatives, din);
    auto x = solve(sysm, shifted);
    if (!x) throw EngineError("internal", "periodicity image is not a cocycle class");
    out.s_matrix = x->rows_slice(0, out.high.dim);
    return out;
}

struct PeriodicResult {
    int dim = 0;
    bool stabilized = false;
};

// HP^parity over the window: stabilized when the last two S maps in the
// window are isomorphisms.
inline PeriodicResult periodic_cohomology(const CocyclicObject& c, int parity) {
    PeriodicResult out;
    std::vector<PeriodicityPair> pairs;
    for (int n = parity; n + 4 <= c.n_max(); n += 2) pairs.push_back(periodicity_pair(c, n));
    if (pairs.empty()) return out;
    const auto& last = pairs.back();
    out.dim = last.high.dim;
    auto is_iso = [](const PeriodicityPair& p) {
        return p.low.dim == p.high.dim && rank(p.s_matrix) == p.low.dim;
    };
    if (pairs.size() >= 2) {
        out.stabilized = is_iso(pairs[pairs.size() - 2]) && is_iso(pairs.back());
    } else {
        out.stabilized = false;
    }
    return out;
}

} // namespace eqcyc
