#include "permbasis/field.hpp"

#include <array>

namespace permbasis {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

// Coefficients of index a in base p (low degree first).
std::array<int, 3> digits(int a, int p, int deg) {
    std::array<int, 3> c{0, 0, 0};
    for (int i = 0; i < deg; ++i) {
        c[i] = a % p;
        a /= p;
    }
    return c;
}

int encode(const std::array<int, 3>& c, int p, int deg) {
    int a = 0;
    for (int i = deg - 1; i >= 0; --i) a = a * p + c[i];
    return a;
}

}  // namespace

Field::Field(int p) : q_(p), p_(p), deg_(1), name_("gf" + std::to_string(p)) {
    build_tables({});
}

Field::Field(int p, int deg, const std::vector<int>& mod)
    : q_(ipow(p, deg)), p_(p), deg_(deg), name_("gf" + std::to_string(q_)) {
    if (deg < 2 || deg > 3 || static_cast<int>(mod.size()) != deg)
        throw std::invalid_argument("extension degree must be 2 or 3 with matching modulus");
    // Root test: a monic polynomial of degree 2 or 3 is irreducible over
    // GF(p) iff it has no root there.
    for (int r = 0; r < p; ++r) {
        int val = 1;  // leading t^deg coefficient
        for (int i = deg - 1; i >= 0; --i) val = (val * r + mod[i]) % p;
        if (val == 0) throw std::invalid_argument("reducible modulus for " + name_);
    }
    build_tables(mod);
}

void Field::build_tables(const std::vector<int>& mod) {
    add_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    // t^deg = -(mod[0] + mod[1]*t + ...), as coefficient array.
    std::array<int, 3> top{0, 0, 0};
    for (int i = 0; i < static_cast<int>(mod.size()); ++i) top[i] = (p_ - mod[i] % p_) % p_;

    for (int a = 0; a < q_; ++a) {
        auto ca = digits(a, p_, deg_);
        for (int b = 0; b < q_; ++b) {
            auto cb = digits(b, p_, deg_);
            std::array<int, 3> s{0, 0, 0};
            for (int i = 0; i < deg_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(encode(s, p_, deg_));

            // Convolve then fold t^deg and t^(deg+1) back down.
            std::array<int, 5> c{0, 0, 0, 0, 0};
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j) c[i + j] = (c[i + j] + ca[i] * cb[j]) % p_;
            for (int k = 2 * deg_ - 2; k >= deg_; --k) {
                int coef = c[k];
                if (coef == 0) continue;
                c[k] = 0;
                for (int i = 0; i < deg_; ++i)
                    c[k - deg_ + i] = (c[k - deg_ + i] + coef * top[i]) % p_;
            }
            std::array<int, 3> m{c[0], c[1], c[2]};
            mul_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(encode(m, p_, deg_));
        }
    }
    for (int a = 0; a < q_; ++a) {
        auto ca = digits(a, p_, deg_);
        std::array<int, 3> n{0, 0, 0};
        for (int i = 0; i < deg_; ++i) n[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<uint8_t>(encode(n, p_, deg_));
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
                inv_[a] = static_cast<uint8_t>(b);
                break;
            }
}

int Field::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::str(int a) const {
    if (deg_ == 1 || a < p_) return std::to_string(a);
    auto c = digits(a, p_, deg_);
    std::string out;
    for (int i = 0; i < deg_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += 't';
            if (i == 2) out += "^2";
        }
    }
    return out.empty() ? "0" : out;
}

const Field& gf(int q) {
    static const Field f3(3);
    static const Field f5(5);
    static const Field f7(7);
    static const Field f9(3, 2, {1, 0});     // t^2 + 1
    static const Field f27(3, 3, {1, 2, 0});  // t^3 + 2t + 1
    switch (q) {
        case 3: return f3;
        case 5: return f5;
        case 7: return f7;
        case 9: return f9;
        case 27: return f27;
        default: throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
}

}  // namespace permbasis
