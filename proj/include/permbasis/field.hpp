#ifndef PERMBASIS_FIELD_HPP
#define PERMBASIS_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permbasis/errors.hpp"

namespace permbasis {

// Table-driven finite field of order q = p^deg, q <= 32.
// Elements are indices 0..q-1. Prime fields: index == residue.
// Extensions: index c0 + c1*p + c2*p^2 encodes c0 + c1*t + c2*t^2,
// where t is a root of the defining modulus. Constants occupy
// indices 0..p-1, so the prime subfield embeds as the identity
// on indices.
class Field {
public:
    // Prime field of order p.
    explicit Field(int p);
    // Extension GF(p^deg) with monic modulus t^deg = -(mod[0] + mod[1]*t + ...),
    // mod holding the deg lower coefficients. The modulus must be irreducible,
    // checked by the root test (valid for deg 2 and 3).
    Field(int p, int deg, const std::vector<int>& mod);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return deg_; }
    const std::string& name() const { return name_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int inv(int a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in " + name_);
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

    // Reduce an integer mod the characteristic and embed as a constant.
    int from_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<int>(r);
    }

    // Canonical token, e.g. "2", "t", "2+t", "1+2*t+t^2".
    std::string str(int a) const;

    bool operator==(const Field& o) const { return this == &o; }
    bool operator!=(const Field& o) const { return this != &o; }

private:
    void build_tables(const std::vector<int>& mod);

    int q_;
    int p_;
    int deg_;
    std::string name_;
    std::vector<uint8_t> add_;
    std::vector<uint8_t> mul_;
    std::vector<uint8_t> neg_;
    std::vector<uint8_t> inv_;
};

// Shared instances: gf(3), gf(5), gf(7), gf(9), gf(27).
const Field& gf(int q);

// Checked scalar: value index plus its field.
class Scalar {
public:
    Scalar(const Field& f, int index) : f_(&f), v_(index) {}
    static Scalar from_int(const Field& f, long long v) { return Scalar(f, f.from_int(v)); }
    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    int index() const { return v_; }
    const Field& field() const { return *f_; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(const Scalar& o) const { return Scalar(*check(o), f_->add(v_, o.v_)); }
    Scalar operator-(const Scalar& o) const { return Scalar(*check(o), f_->sub(v_, o.v_)); }
    Scalar operator*(const Scalar& o) const { return Scalar(*check(o), f_->mul(v_, o.v_)); }
    Scalar operator/(const Scalar& o) const { return Scalar(*check(o), f_->div(v_, o.v_)); }
    Scalar operator-() const { return Scalar(*f_, f_->neg(v_)); }
    Scalar inv() const { return Scalar(*f_, f_->inv(v_)); }
    bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const { return f_->str(v_); }

private:
    const Field* check(const Scalar& o) const {
        if (f_ != o.f_) throw FieldMismatch("scalars from different fields");
        return f_;
    }
    const Field* f_;
    int v_;
};

}  // namespace permbasis

#endif
