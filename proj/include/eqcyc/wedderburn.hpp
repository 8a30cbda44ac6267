// Block decomposition of semisimple algebras over the presented field.
//
// Strategy: radical check via the trace form, center via commutation
// equations, central primitive idempotents by rational eigenvalue
// refinement, splitness certified by exhibiting a primitive idempotent
// whose corner is one-dimensional, matrix units by dual bases of the
// column/row spaces of that idempotent.  Blocks whose division part is a
// nontrivial extension (or whose eigenvalues never become rational) are
// reported unsplit rather than guessed.

#pragma once

#include "algebra.hpp"

#include <optional>

namespace eqcyc {

namespace detail {

// Distinct rational roots of a polynomial with rational coefficients
// (c[0] + c[1] t + ...), by the rational root theorem.
inline std::vector<Rat> rational_roots(std::vector<Rat> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() <= 1) return {};
    std::vector<Rat> roots;
    // strip t | p(t)
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        c.erase(c.begin(), c.begin() + low);
    }
    if (c.size() <= 1) return roots;
    // scale to integers
    mpz_class lcm = 1;
    for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> ic(c.size());
    for (size_t i = 0; i < c.size(); ++i) ic[i] = mpz_class(c[i] * lcm);
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        n = abs(n);
        for (mpz_class d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        return out;
    };
    auto eval = [&](const Rat& t) {
        Rat v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
        return v;
    };
    for (const auto& p : divisors(ic[0]))
        for (const auto& q : divisors(ic.back()))
            for (int sgn : {1, -1}) {
                Rat cand(sgn * p, q);
                cand.canonicalize();
                if (eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// p(t) / (t - alpha), assuming alpha is a root.
inline std::vector<Scalar> deflate(const std::vector<Scalar>& p, const Scalar& alpha) {
    std::vector<Scalar> q(p.size() - 1, Scalar::zero(p[0].field()));
    Scalar carry = Scalar::zero(p[0].field());
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + alpha * carry;
        q[i - 1] = carry;
    }
    return q;
}

} // namespace detail

// Minimal polynomial of the element x (ambient column) acting in the unital
// subalgebra with unit u, as monic coefficients c[0..d] over the field.
inline std::vector<Scalar> min_poly(const Algebra& a, const Mat& x, const Mat& u) {
    Mat powers = u; // columns: u, x, x^2, ...
    Mat cur = u;
    for (int k = 1;; ++k) {
        cur = a.product(x, cur);
        if (auto c = solve(powers, cur)) {
            std::vector<Scalar> m(k + 1, Scalar::zero(a.field));
            m[k] = Scalar::one(a.field);
            for (int i = 0; i < k; ++i) m[i] = -c->get(i, 0);
            return m;
        }
        powers = hstack(powers, cur);
        if (k > a.dim) throw EngineError("internal", "min_poly did not terminate");
    }
}

// Evaluate a polynomial at an algebra element (unit u plays the role of 1).
inline Mat poly_at(const Algebra& a, const std::vector<Scalar>& p, const Mat& x, const Mat& u) {
    Mat acc(a.dim, 1, a.field);
    for (size_t i = p.size(); i-- > 0;) {
        acc = a.product(x, acc);
        acc = acc + p[i] * u;
    }
    return acc;
}

struct WedderburnBlock {
    Mat central_idempotent; // dim x 1
    int block_dim = 0;      // dim of the two-sided ideal
    bool split = false;
    int size = 0;           // s with block = Mat_s, valid when split
    std::vector<Mat> units; // E_jk at index j*size+k (ambient columns), when split
};

struct Wedderburn {
    bool semisimple = false;
    bool all_split = false;
    std::vector<WedderburnBlock> blocks;
};

namespace detail {

// Search for a primitive idempotent in the unital subalgebra (span v, unit u)
// by splitting minimal polynomials at rational roots.  Returns nullopt when
// no rational split exists (nontrivial division part).
inline std::optional<Mat> primitive_idempotent(const Algebra& a, Mat v, Mat u) {
    while (v.cols() > 1) {
        // candidate pool: basis columns, then pairwise sums
        std::vector<Mat> pool;
        for (int j = 0; j < v.cols(); ++j) pool.push_back(v.column(j));
        for (int j = 0; j < v.cols(); ++j)
            for (int k = j + 1; k < v.cols(); ++k) pool.push_back(v.column(j) + v.column(k));
        bool advanced = false;
        for (const Mat& x : pool) {
            auto m = min_poly(a, x, u);
            if (m.size() <= 2) continue; // scalar multiple of u, no split
            std::vector<Rat> rc(m.size());
            bool rational = true;
            for (size_t i = 0; i < m.size(); ++i) {
                if (!m[i].field()->is_rational() && !([&] {
                        for (size_t j = 1; j < m[i].coords().size(); ++j)
                            if (m[i].coords()[j] != 0) return false;
                        return true;
                    }())) {
                    rational = false;
                    break;
                }
                rc[i] = m[i].coords()[0];
            }
            std::vector<Rat> roots = rational ? rational_roots(rc) : std::vector<Rat>{};
            if (roots.empty()) continue;
            Scalar alpha(roots.front(), a.field);
            // q = m/(t-alpha); p = q(x)/q(alpha) projects onto the alpha part
            auto q = deflate(m, alpha);
            Scalar qa = Scalar::zero(a.field);
            for (size_t i = q.size(); i-- > 0;) qa = q[i] + alpha * qa;
            Mat p = poly_at(a, q, x, u);
            p = qa.inverse() * p;
            // corner pvp
            Mat corner_map = a.lmul(p) * a.rmul(p);
            Mat w = column_space(corner_map * v);
            if (w.cols() == 0 || w.cols() >= v.cols())
                throw EngineError("internal", "idempotent split failed to shrink");
            v = w;
            u = p;
            advanced = true;
            break;
        }
        if (!advanced) return std::nullopt;
    }
    return u;
}

} // namespace detail

inline Wedderburn wedderburn_blocks(const Algebra& a) {
    Wedderburn w;
    w.semisimple = is_semisimple(a);
    if (!w.semisimple) return w;
    const FieldPtr& f = a.field;

    // split the center into rational eigencomponents
    Mat z = center_basis(a); // dim x c
    std::vector<Mat> components = {z};
    for (int t = 0; t < z.cols(); ++t) {
        Mat lz = a.lmul(z.column(t));
        std::vector<Mat> next;
        for (const Mat& comp : components) {
            if (comp.cols() == 1) {
                next.push_back(comp);
                continue;
            }
            auto mt = solve(comp, lz * comp);
            if (!mt) throw EngineError("internal", "center not invariant");
            auto cp = char_poly(*mt);
            std::vector<Rat> rc(cp.size());
            bool rational = true;
            for (size_t i = 0; i < cp.size() && rational; ++i) {
                for (size_t j = 1; j < cp[i].coords().size(); ++j)
                    if (cp[i].coords()[j] != 0) rational = false;
                rc[i] = cp[i].coords()[0];
            }
            auto roots = rational ? detail::rational_roots(rc) : std::vector<Rat>{};
            if (roots.size() <= 1) {
                next.push_back(comp);
                continue;
            }
            std::vector<Scalar> rest = cp;
            int found = 0;
            for (const Rat& r0 : roots) {
                Scalar alpha(r0, f);
                Mat eig = kernel_basis(*mt - alpha * Mat::identity(mt->rows(), f));
                if (eig.cols() > 0) {
                    next.push_back(comp * eig);
                    found += eig.cols();
                    // deflate every occurrence of this root
                    while (true) {
                        Scalar val = Scalar::zero(f);
                        for (size_t i = rest.size(); i-- > 0;) val = rest[i] + alpha * val;
                        if (!val.is_zero() || rest.size() <= 1) break;
                        rest = detail::deflate(rest, alpha);
                    }
                }
            }
            if (found < comp.cols()) {
                // non-rational remainder: joint kernel of remaining factor
                Mat rm = Mat::zero(mt->rows(), mt->rows(), f);
                Mat acc = Mat::identity(mt->rows(), f);
                for (size_t i = 0; i < rest.size(); ++i) {
                    rm = rm + rest[i] * acc;
                    acc = *mt * acc;
                }
                Mat leftover = kernel_basis(rm);
                if (leftover.cols() > 0) next.push_back(comp * leftover);
            }
        }
        components = std::move(next);
    }

    // identity element of each component = central idempotent
    w.all_split = true;
    for (const Mat& comp : components) {
        WedderburnBlock blk;
        if (comp.cols() == 1) {
            Mat v = comp; // v^2 = alpha v
            Mat v2 = a.product(v, v);
            auto c = solve(v, v2);
            if (!c || c->get(0, 0).is_zero())
                throw EngineError("internal", "nilpotent central component in semisimple algebra");
            blk.central_idempotent = c->get(0, 0).inverse() * v;
        } else {
            // solve e in comp with e * comp_j = comp_j for all j
            Mat sys(0, comp.cols(), f), rhs(0, 1, f);
            for (int j = 0; j < comp.cols(); ++j) {
                Mat lj = a.rmul(comp.column(j)) * comp; // dim x k, (e-coords) -> e*c_j
                sys = sys.rows() == 0 ? lj : vstack(sys, lj);
                rhs = rhs.rows() == 0 ? comp.column(j) : vstack(rhs, comp.column(j));
            }
            auto e = solve(sys, rhs);
            if (!e) throw EngineError("internal", "component has no identity");
            blk.central_idempotent = comp * *e;
        }
        Mat ideal = column_space(a.lmul(blk.central_idempotent));
        blk.block_dim = ideal.cols();
        auto prim = detail::primitive_idempotent(a, ideal, blk.central_idempotent);
        if (prim) {
            Mat fidem = *prim;
            Mat col = column_space(a.rmul(fidem)); // A f
            Mat row = column_space(a.lmul(fidem)); // f A
            // restrict to this block
            col = column_space(a.lmul(blk.central_idempotent) * col);
            row = column_space(a.rmul(blk.central_idempotent) * row);
            int s = col.cols();
            if (s == row.cols() && s * s == blk.block_dim) {
                // dual bases: u'_j v_k = delta_jk f
                Mat gram(s, s, f);
                for (int j = 0; j < s; ++j)
                    for (int k = 0; k < s; ++k) {
                        Mat prod = a.product(row.column(j), col.column(k));
                        auto c = solve(fidem, prod);
                        if (!c) throw EngineError("internal", "corner product outside line");
                        gram.set(j, k, c->get(0, 0));
                    }
                auto ginv = solve(gram, Mat::identity(s, f));
                if (!ginv) throw EngineError("internal", "degenerate corner pairing");
                blk.split = true;
                blk.size = s;
                blk.units.resize(s * s);
                std::vector<Mat> uprime(s);
                for (int j = 0; j < s; ++j) {
                    uprime[j] = Mat(a.dim, 1, f);
                    for (int k = 0; k < s; ++k)
                        uprime[j] = uprime[j] + ginv->get(j, k) * row.column(k);
                }
                for (int j = 0; j < s; ++j)
                    for (int k = 0; k < s; ++k)
                        blk.units[j * s + k] = a.product(col.column(j), uprime[k]);
            }
        }
        if (!blk.split) w.all_split = false;
        w.blocks.push_back(std::move(blk));
    }
    // deterministic order: by first nonzero coordinate pattern of the idempotent
    std::sort(w.blocks.begin(), w.blocks.end(),
              [](const WedderburnBlock& x, const WedderburnBlock& y) {
                  for (int i = 0; i < x.central_idempotent.rows(); ++i) {
                      Scalar a0 = x.central_idempotent.get(i, 0);
                      Scalar b0 = y.central_idempotent.get(i, 0);
                      if (a0 == b0) continue;
                      return !a0.is_zero() && (b0.is_zero() || a0.coords() < b0.coords());
                  }
                  return false;
              });
    return w;
}

// Multiplicity of each split block in a module given by the trace of the
// action of the block's central idempotent.
inline int block_multiplicity(const WedderburnBlock& blk, const Mat& action_of_idempotent) {
    if (!blk.split) throw EngineError("not-split", "multiplicity needs a split block");
    Scalar tr = action_of_idempotent.trace();
    Rat q = tr.rational() / Rat(blk.size);
    if (q.get_den() != 1) throw EngineError("internal", "non-integral multiplicity");
    return static_cast<int>(q.get_num().get_si());
}

} // namespace eqcyc
