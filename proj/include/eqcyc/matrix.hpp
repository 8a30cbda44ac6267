// Dense/sparse exact matrices over a Field, with the row-reduction
// primitives (rank, kernel, solve) every other module is built on.
//
// Storage is row-sparse: each row keeps its nonzero (column, value) pairs
// sorted by column.  The tensor basis convention is fixed here once and
// used everywhere: e_i (x) f_j sits at position i*dim(f-space)+j.

#pragma once

#include "field.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace eqcyc {

using SparseRow = std::vector<std::pair<int, Scalar>>; // sorted by column

class Mat {
public:
    Mat() : rows_(0), cols_(0), field_(Field::rationals()) {}

    Mat(int rows, int cols, FieldPtr field = Field::rationals())
        : rows_(rows), cols_(cols), field_(std::move(field)), data_(rows) {}

    static Mat identity(int n, const FieldPtr& f = Field::rationals()) {
        Mat m(n, n, f);
        for (int i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar::one(f)});
        return m;
    }

    static Mat zero(int rows, int cols, const FieldPtr& f = Field::rationals()) {
        return Mat(rows, cols, f);
    }

    static Mat from_rows(const std::vector<std::vector<Scalar>>& rows, const FieldPtr& f) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        Mat m(r, c, f);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (!rows[i][j].is_zero()) m.data_[i].push_back({j, rows[i][j]});
        return m;
    }

    static Mat from_ints(const std::vector<std::vector<long>>& rows,
                         const FieldPtr& f = Field::rationals()) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        Mat m(r, c, f);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rows[i][j] != 0) m.data_[i].push_back({j, Scalar(Rat(rows[i][j]), f)});
        return m;
    }

    static Mat unit_column(int n, int i, const FieldPtr& f = Field::rationals()) {
        Mat m(n, 1, f);
        m.data_[i].push_back({0, Scalar::one(f)});
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    const SparseRow& row(int i) const { return data_[i]; }

    Scalar get(int i, int j) const {
        const auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != r.end() && it->first == j) return it->second;
        return Scalar::zero(field_);
    }

    void set(int i, int j, const Scalar& v) {
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != r.end() && it->first == j) {
            if (v.is_zero())
                r.erase(it);
            else
                it->second = v;
        } else if (!v.is_zero()) {
            r.insert(it, {j, v});
        }
    }

    void set_row(int i, SparseRow r) { data_[i] = std::move(r); }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i) {
            if (data_[i].size() != 1) return false;
            if (data_[i][0].first != i || !data_[i][0].second.is_one()) return false;
        }
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat c(a.rows_, a.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i) c.data_[i] = merge(a.data_[i], b.data_[i], false);
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat c(a.rows_, a.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i) c.data_[i] = merge(a.data_[i], b.data_[i], true);
        return c;
    }
    Mat operator-() const {
        Mat c = *this;
        for (auto& r : c.data_)
            for (auto& [j, v] : r) v = -v;
        return c;
    }

    friend Mat operator*(const Scalar& s, const Mat& a) {
        Mat c(a.rows_, a.cols_, a.field_);
        if (s.is_zero()) return c;
        c.data_ = a.data_;
        for (auto& r : c.data_)
            for (auto& [j, v] : r) v = s * v;
        return c;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat c(a.rows_, b.cols_, a.field_);
        std::map<int, Scalar> acc;
        for (int i = 0; i < a.rows_; ++i) {
            acc.clear();
            for (const auto& [k, av] : a.data_[i]) {
                for (const auto& [j, bv] : b.data_[k]) {
                    auto it = acc.find(j);
                    if (it == acc.end())
                        acc.emplace(j, av * bv);
                    else
                        it->second += av * bv;
                }
            }
            SparseRow r;
            r.reserve(acc.size());
            for (auto& [j, v] : acc)
                if (!v.is_zero()) r.push_back({j, std::move(v)});
            c.data_[i] = std::move(r);
        }
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_, field_);
        std::vector<size_t> counts(cols_, 0);
        for (const auto& r : data_)
            for (const auto& [j, v] : r) ++counts[j];
        for (int j = 0; j < cols_; ++j) t.data_[j].reserve(counts[j]);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) t.data_[j].push_back({i, v});
        return t;
    }

    // Kronecker product in the row-major basis convention.
    friend Mat kron(const Mat& a, const Mat& b) {
        Mat c(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
        for (int ia = 0; ia < a.rows_; ++ia) {
            for (int ib = 0; ib < b.rows_; ++ib) {
                SparseRow& out = c.data_[ia * b.rows_ + ib];
                out.reserve(a.data_[ia].size() * b.data_[ib].size());
                for (const auto& [ja, va] : a.data_[ia])
                    for (const auto& [jb, vb] : b.data_[ib])
                        out.push_back({ja * b.cols_ + jb, va * vb});
            }
        }
        return c;
    }

    friend Mat hstack(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_);
        Mat c(a.rows_, a.cols_ + b.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i) {
            c.data_[i] = a.data_[i];
            for (const auto& [j, v] : b.data_[i]) c.data_[i].push_back({j + a.cols_, v});
        }
        return c;
    }

    friend Mat vstack(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.cols_);
        Mat c(a.rows_ + b.rows_, a.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i) c.data_[i] = a.data_[i];
        for (int i = 0; i < b.rows_; ++i) c.data_[a.rows_ + i] = b.data_[i];
        return c;
    }

    Mat columns(const std::vector<int>& idx) const {
        std::vector<int> pos(cols_, -1);
        for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
        Mat c(rows_, static_cast<int>(idx.size()), field_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i])
                if (pos[j] >= 0) c.data_[i].push_back({pos[j], v});
        for (auto& r : c.data_)
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        return c;
    }

    Mat column(int j) const { return columns({j}); }

    Mat rows_slice(int from, int count) const {
        Mat c(count, cols_, field_);
        for (int i = 0; i < count; ++i) c.data_[i] = data_[from + i];
        return c;
    }

    Scalar trace() const {
        assert(rows_ == cols_);
        Scalar t = Scalar::zero(field_);
        for (int i = 0; i < rows_; ++i) t += get(i, i);
        return t;
    }

    // Scalar product of two column vectors (no conjugation).
    friend Scalar dot(const Mat& a, const Mat& b) {
        assert(a.cols_ == 1 && b.cols_ == 1 && a.rows_ == b.rows_);
        Scalar s = Scalar::zero(a.field_);
        for (int i = 0; i < a.rows_; ++i)
            if (!a.data_[i].empty() && !b.data_[i].empty())
                s += a.data_[i][0].second * b.data_[i][0].second;
        return s;
    }

private:
    static SparseRow merge(const SparseRow& a, const SparseRow& b, bool subtract) {
        SparseRow out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back(b[j]);
                if (subtract) out.back().second = -out.back().second;
                ++j;
            } else {
                Scalar v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
                if (!v.is_zero()) out.push_back({a[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    }

    int rows_, cols_;
    FieldPtr field_;
    std::vector<SparseRow> data_;
};

// ---------------------------------------------------------------------------
// Row reduction

struct Echelon {
    std::vector<SparseRow> rows; // reduced rows, pivot columns strictly increasing
    std::vector<int> pivots;     // pivot column of each row
    int cols = 0;
    FieldPtr field;

    int rank() const { return static_cast<int>(rows.size()); }
    bool is_pivot(int col) const {
        return std::binary_search(pivots.begin(), pivots.end(), col);
    }
};

namespace detail {

inline SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    // a + c*b
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) out.push_back({b[j].first, v});
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace detail

// Reduced row echelon form via incremental insertion.  Deterministic: rows
// are consumed in order and pivots are leading columns.
inline Echelon rref(const Mat& m) {
    Echelon e;
    e.cols = m.cols();
    e.field = m.field();
    std::vector<int> pivot_of_col(m.cols(), -1); // col -> index into e.rows
    for (int i = 0; i < m.rows(); ++i) {
        SparseRow r = m.row(i);
        // eliminate pivot columns left to right; existing echelon rows carry
        // no pivot columns besides their own, so each elimination leaves the
        // prefix before position k intact.
        size_t k = 0;
        while (k < r.size()) {
            int pr = pivot_of_col[r[k].first];
            if (pr < 0) {
                ++k;
                continue;
            }
            Scalar coeff = -r[k].second;
            r = detail::axpy(r, coeff, e.rows[pr]);
        }
        if (r.empty()) continue;
        int lead = r[0].first;
        Scalar inv = r[0].second.inverse();
        for (auto& [j, v] : r) v = inv * v;
        // eliminate this column from all existing rows containing it
        int newIdx = static_cast<int>(e.rows.size());
        for (size_t ri = 0; ri < e.rows.size(); ++ri) {
            const auto& er = e.rows[ri];
            auto it = std::lower_bound(er.begin(), er.end(), lead,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it != er.end() && it->first == lead) {
                Scalar coeff = -it->second;
                e.rows[ri] = detail::axpy(er, coeff, r);
            }
        }
        e.rows.push_back(std::move(r));
        pivot_of_col[lead] = newIdx;
    }
    // sort rows by pivot column
    std::vector<int> order(e.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return e.rows[a][0].first < e.rows[b][0].first;
    });
    std::vector<SparseRow> sorted;
    sorted.reserve(e.rows.size());
    e.pivots.clear();
    for (int idx : order) {
        e.pivots.push_back(e.rows[idx][0].first);
        sorted.push_back(std::move(e.rows[idx]));
    }
    e.rows = std::move(sorted);
    return e;
}

inline int rank(const Mat& m) { return rref(m).rank(); }

/// Basis of {v : m v = 0} as matrix columns.  Asserts rank-nullity.  The
// basis is pivot-normalized: row free_cols[j] of the result carries the
// identity pattern (reported through the optional out-parameter), which
// lets callers compress operators without another elimination.
inline Mat kernel_basis(const Mat& m, std::vector<int>* free_cols_out = nullptr) {
    Echelon e = rref(m);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Mat k(m.cols(), static_cast<int>(free_cols.size()), m.field());
    std::vector<int> col_of_free(m.cols(), -1);
    for (size_t j = 0; j < free_cols.size(); ++j) col_of_free[free_cols[j]] = static_cast<int>(j);
    for (size_t j = 0; j < free_cols.size(); ++j)
        k.set(free_cols[j], static_cast<int>(j), Scalar::one(m.field()));
    for (size_t ri = 0; ri < e.rows.size(); ++ri) {
        int p = e.pivots[ri];
        for (const auto& [c, v] : e.rows[ri]) {
            if (c == p) continue;
            int j = col_of_free[c];
            if (j >= 0) k.set(p, j, -v);
        }
    }
    assert(e.rank() + k.cols() == m.cols());
    if (free_cols_out) *free_cols_out = std::move(free_cols);
    return k;
}

// Solve m x = rhs for each column of rhs.  Returns nullopt if inconsistent.
inline std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
    assert(m.rows() == rhs.rows());
    Echelon e = rref(hstack(m, rhs));
    Mat x(m.cols(), rhs.cols(), m.field());
    for (size_t ri = 0; ri < e.rows.size(); ++ri) {
        int p = e.pivots[ri];
        if (p >= m.cols()) return std::nullopt; // pivot in augmented part
        for (const auto& [c, v] : e.rows[ri])
            if (c >= m.cols()) x.set(p, c - m.cols(), v);
    }
    return x;
}

// Column space basis (subset of columns of m, by pivot order of m^T-free RREF).
inline Mat column_space(const Mat& m) {
    Echelon e = rref(m.transpose());
    Mat b(m.rows(), e.rank(), m.field());
    for (int r = 0; r < e.rank(); ++r)
        for (const auto& [j, v] : e.rows[r]) b.set(j, r, v);
    return b;
}

// Permutation matrix reindexing a tensor product: factor k of the output is
// factor perm[k] of the input.  dims are the input factor dimensions.
inline Mat tensor_permutation(const std::vector<int>& dims, const std::vector<int>& perm,
                              const FieldPtr& f = Field::rationals()) {
    int n = 1;
    for (int d : dims) n *= d;
    std::vector<int> out_dims(perm.size());
    for (size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
    Mat p(n, n, f);
    std::vector<int> idx(dims.size(), 0);
    for (int lin = 0; lin < n; ++lin) {
        // lin decodes (row-major) to idx over input dims
        int rem = lin;
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        int out = 0;
        for (size_t k = 0; k < perm.size(); ++k) out = out * out_dims[k] + idx[perm[k]];
        p.set(out, lin, Scalar::one(f));
    }
    return p;
}

// Monic characteristic polynomial coefficients c_0..c_n (c_n = 1) by the
// Faddeev-LeVerrier recursion; exact in characteristic zero.
inline std::vector<Scalar> char_poly(const Mat& m) {
    int n = m.rows();
    const FieldPtr& f = m.field();
    std::vector<Scalar> c(n + 1, Scalar::zero(f));
    c[n] = Scalar::one(f);
    Mat mk = Mat::identity(n, f);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Scalar ck = mk.trace();
        // c_{n-k} = -(1/k) * (tr(M_k) + sum_{i=1}^{k-1} c_{n-i} tr(M_{k-i}))
        // use the standard recursion with auxiliary matrices instead:
        // M_{k+1} = A (M_k + c_{n-k} I)
        Scalar divk = Scalar(Rat(1, k), f);
        c[n - k] = -(divk * ck);
        if (k < n) {
            for (int i = 0; i < n; ++i) mk.set(i, i, mk.get(i, i) + c[n - k]);
        }
    }
    return c;
}

} // namespace eqcyc
