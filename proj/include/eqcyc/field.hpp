// Exact scalar arithmetic over Q or a simple extension Q[x]/(p).
//
// A Field is described by the monic minimal polynomial p of its generator;
// degree 1 encodes Q itself.  Scalars are coordinate vectors in the power
// basis 1, x, ..., x^{d-1} with GMP rationals as coordinates, so every
// operation is exact.  Irreducibility of p is a user contract: a zero
// divisor surfaces as a FieldError naming the offending element.

#pragma once

#include <gmpxx.h>

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcyc {

using Rat = mpq_class;

class EngineError : public std::runtime_error {
public:
    EngineError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class FieldError : public EngineError {
public:
    explicit FieldError(const std::string& detail) : EngineError("field-error", detail) {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // minpoly lists the coefficients c_0..c_{d-1} of a monic polynomial
    // x^d + c_{d-1} x^{d-1} + ... + c_0.
    explicit Field(std::vector<Rat> minpoly) : minpoly_(std::move(minpoly)) {
        if (minpoly_.empty()) throw FieldError("minimal polynomial must have degree >= 1");
        precompute_reductions();
    }

    static const FieldPtr& rationals() {
        static FieldPtr q = std::make_shared<Field>(std::vector<Rat>{Rat(0)});
        return q;
    }

    static FieldPtr extension(std::vector<Rat> minpoly) {
        if (minpoly.size() == 1) return rationals();
        return std::make_shared<Field>(std::move(minpoly));
    }

    int degree() const { return static_cast<int>(minpoly_.size()); }
    const std::vector<Rat>& minpoly() const { return minpoly_; }
    bool is_rational() const { return degree() == 1; }

    // x^{d+k} in the power basis, for k = 0..d-2.
    const std::vector<Rat>& reduced_power(int k) const { return reduced_powers_[k]; }

    bool same_as(const Field& other) const {
        return this == &other || minpoly_ == other.minpoly_;
    }

private:
    void precompute_reductions() {
        int d = degree();
        reduced_powers_.clear();
        // x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
        std::vector<Rat> cur(d);
        for (int i = 0; i < d; ++i) cur[i] = -minpoly_[i];
        reduced_powers_.push_back(cur);
        for (int k = 1; k <= d - 2; ++k) {
            std::vector<Rat> nxt(d, Rat(0));
            // multiply cur by x and reduce
            Rat top = cur[d - 1];
            for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            for (int i = 0; i < d; ++i) nxt[i] += top * reduced_powers_[0][i];
            reduced_powers_.push_back(nxt);
            cur = nxt;
        }
    }

    std::vector<Rat> minpoly_;
    std::vector<std::vector<Rat>> reduced_powers_;
};

class Scalar {
public:
    Scalar() : field_(Field::rationals()), coords_(1, Rat(0)) {}

    Scalar(FieldPtr field, std::vector<Rat> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw FieldError("coordinate count does not match field degree");
    }

    // Rational scalars embed into any field as constants.
    explicit Scalar(const Rat& r, FieldPtr field = Field::rationals())
        : field_(std::move(field)), coords_(field_->degree(), Rat(0)) {
        coords_[0] = r;
    }

    Scalar(long num, long den = 1) : field_(Field::rationals()), coords_(1, Rat(num, den)) {
        coords_[0].canonicalize();
    }

    static Scalar zero(const FieldPtr& f) { return Scalar(Rat(0), f); }
    static Scalar one(const FieldPtr& f) { return Scalar(Rat(1), f); }
    static Scalar generator(const FieldPtr& f) {
        std::vector<Rat> c(f->degree(), Rat(0));
        if (f->degree() < 2) throw FieldError("Q has no generator besides 1");
        c[1] = 1;
        return Scalar(f, c);
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (coords_[0] != 1) return false;
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    // The rational value of a degree-zero scalar.
    const Rat& rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) throw FieldError("scalar is not rational: " + to_string());
        return coords_[0];
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
        return r;
    }
    Scalar operator-() const {
        Scalar r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }
    Scalar& operator+=(const Scalar& b) {
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
        return *this;
    }
    Scalar& operator-=(const Scalar& b) {
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= b.coords_[i];
        return *this;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        int d = a.field_->degree();
        if (d == 1) {
            Scalar r = a;
            r.coords_[0] *= b.coords_[0];
            return r;
        }
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (a.coords_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b.coords_[j] == 0) continue;
                prod[i + j] += a.coords_[i] * b.coords_[j];
            }
        }
        std::vector<Rat> out(prod.begin(), prod.begin() + d);
        for (int k = d; k < 2 * d - 1; ++k) {
            if (prod[k] == 0) continue;
            const auto& red = a.field_->reduced_power(k - d);
            for (int i = 0; i < d; ++i) out[i] += prod[k] * red[i];
        }
        return Scalar(a.field_, std::move(out));
    }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const {
        if (is_zero()) throw FieldError("division by zero");
        int d = field_->degree();
        if (d == 1) {
            Scalar r = *this;
            r.coords_[0] = Rat(1) / r.coords_[0];
            return r;
        }
        // Extended Euclidean algorithm in Q[x] for gcd(this, minpoly).
        std::vector<Rat> r0 = field_->minpoly();
        r0.push_back(Rat(1)); // monic of degree d
        std::vector<Rat> r1 = coords_;
        trim(r1);
        std::vector<Rat> s0{}, s1{Rat(1)}; // Bezout coefficients against `this`
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (static_cast<int>(r0.size()) != 1)
            throw FieldError("zero divisor (minpoly not irreducible?): " + to_string());
        Rat lead = r0[0];
        std::vector<Rat> inv(d, Rat(0));
        for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(d); ++i)
            inv[i] = s0[i] / lead;
        return Scalar(field_, std::move(inv));
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    std::string to_string() const {
        std::ostringstream os;
        if (field_->degree() == 1) {
            os << coords_[0];
        } else {
            os << "[";
            for (size_t i = 0; i < coords_.size(); ++i) {
                if (i) os << ", ";
                os << coords_[i];
            }
            os << "]";
        }
        return os.str();
    }

    // "num/den" form; one string per coordinate.
    std::vector<std::string> serialize() const {
        std::vector<std::string> out;
        out.reserve(coords_.size());
        for (const auto& c : coords_) {
            std::ostringstream os;
            os << c.get_num();
            if (c.get_den() != 1) os << "/" << c.get_den();
            out.push_back(os.str());
        }
        return out;
    }

    static Rat parse_rational(const std::string& s) {
        Rat r(s);
        r.canonicalize();
        return r;
    }

private:
    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        trim(c);
        return c;
    }
    static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> c(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
        trim(c);
        return c;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> a,
                                                                     const std::vector<Rat>& b) {
        trim(a);
        std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
        while (a.size() >= b.size() && !a.empty()) {
            Rat c = a.back() / b.back();
            size_t shift = a.size() - b.size();
            q[shift] += c;
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            trim(a);
        }
        return {q, a};
    }

    FieldPtr field_;
    std::vector<Rat> coords_;
};

} // namespace eqcyc
