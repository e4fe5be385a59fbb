#include "permbasis/element.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace permbasis {

bool mask_lex_less(uint32_t a, uint32_t b) {
    while (a && b) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;  // proper prefix comes first
}

namespace {

void check_pair(const Element& f, const Element& g) {
    if (f.field() != g.field()) throw FieldMismatch("elements from different fields");
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("elements over different variable counts");
}

void check_var(int i, const Element& f) {
    if (i < 1 || i > f.nvars()) throw std::out_of_range("variable index out of range");
}

}  // namespace

Element::Element(const Field& f, int nvars) : f_(&f), m_(nvars) {
    if (nvars < 0 || nvars > MAX_VARS)
        throw std::invalid_argument("variable count outside [0, " + std::to_string(MAX_VARS) +
                                    "]");
}

Element Element::monomial(const Field& f, int nvars, uint32_t vars, int coeff) {
    Element e(f, nvars);
    if (vars >> nvars) throw std::out_of_range("monomial uses variables beyond nvars");
    e.set(vars, coeff);
    return e;
}

Element Element::constant(const Field& f, int nvars, int coeff) {
    return monomial(f, nvars, 0, coeff);
}

Element Element::variable(const Field& f, int nvars, int i) {
    if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
    return monomial(f, nvars, 1u << (i - 1), 1);
}

Element Element::linear_form(const Field& f, const std::vector<int>& coeffs) {
    Element e(f, static_cast<int>(coeffs.size()));
    for (size_t j = 0; j < coeffs.size(); ++j) e.set(1u << j, coeffs[j]);
    return e;
}

int Element::coeff(uint32_t vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? 0 : it->second;
}

int Element::degree() const {
    int d = -1;
    for (const auto& [vars, c] : terms_) d = std::max(d, std::popcount(vars));
    return d;
}

bool Element::is_homogeneous() const {
    int d = -1;
    for (const auto& [vars, c] : terms_) {
        int k = std::popcount(vars);
        if (d == -1) d = k;
        else if (k != d) return false;
    }
    return true;
}

uint32_t Element::support_mask() const {
    uint32_t s = 0;
    for (const auto& [vars, c] : terms_) s |= vars;
    return s;
}

bool Element::operator==(const Element& o) const {
    return f_ == o.f_ && m_ == o.m_ && terms_ == o.terms_;
}

void Element::set(uint32_t vars, int coeff) {
    if (coeff == 0) terms_.erase(vars);
    else terms_[vars] = coeff;
}

void Element::accumulate(uint32_t vars, int coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(vars);
    if (it == terms_.end()) {
        terms_.emplace(vars, coeff);
        return;
    }
    int s = f_->add(it->second, coeff);
    if (s == 0) terms_.erase(it);
    else it->second = s;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::vector<uint32_t> order;
    order.reserve(terms_.size());
    for (const auto& [vars, c] : terms_) order.push_back(vars);
    std::sort(order.begin(), order.end(), mask_lex_less);

    std::string out;
    for (uint32_t vars : order) {
        if (!out.empty()) out += " + ";
        std::string ctok = f_->str(terms_.at(vars));
        if (vars == 0) {
            out += ctok;
            continue;
        }
        bool unit = (terms_.at(vars) == 1);
        if (!unit) {
            if (ctok.find('+') != std::string::npos) ctok = "(" + ctok + ")";
            out += ctok + "*";
        }
        bool first = true;
        for (uint32_t rest = vars; rest; rest &= rest - 1) {
            if (!first) out += "*";
            out += "x" + std::to_string(std::countr_zero(rest) + 1);
            first = false;
        }
    }
    return out;
}

Element el_add(const Element& f, const Element& g) {
    check_pair(f, g);
    Element r = f;
    for (const auto& [vars, c] : g.terms_) r.accumulate(vars, c);
    return r;
}

Element el_sub(const Element& f, const Element& g) {
    check_pair(f, g);
    Element r = f;
    for (const auto& [vars, c] : g.terms_) r.accumulate(vars, g.field().neg(c));
    return r;
}

Element el_scale(int c, const Element& f) {
    Element r(f.field(), f.nvars());
    if (c == 0) return r;
    for (const auto& [vars, a] : f.terms_) r.terms_.emplace(vars, f.field().mul(c, a));
    return r;
}

Element el_mul(const Element& f, const Element& g) {
    check_pair(f, g);
    const Field& F = f.field();
    Element r(F, f.nvars());
    for (const auto& [va, ca] : f.terms_)
        for (const auto& [vb, cb] : g.terms_) {
            if (va & vb) continue;  // squarefree: repeated variable kills the term
            r.accumulate(va | vb, F.mul(ca, cb));
        }
    return r;
}

Element op_E(int i, const Element& f) {
    check_var(i, f);
    uint32_t bit = 1u << (i - 1);
    Element r(f.field(), f.nvars());
    for (const auto& [vars, c] : f.terms_)
        if (!(vars & bit)) r.terms_.emplace(vars, c);
    return r;
}

Element op_D(int i, const Element& f) {
    check_var(i, f);
    uint32_t bit = 1u << (i - 1);
    Element r(f.field(), f.nvars());
    for (const auto& [vars, c] : f.terms_)
        if (vars & bit) r.terms_.emplace(vars & ~bit, c);
    return r;
}

Element graded_component(const Element& f, int k) {
    Element r(f.field(), f.nvars());
    for (const auto& [vars, c] : f.terms_)
        if (std::popcount(vars) == k) r.terms_.emplace(vars, c);
    return r;
}

Element reduce_R(const Element& u, int x, const Element& f) {
    check_pair(u, f);
    check_var(x, f);
    if (u.degree() > 1) throw std::invalid_argument("divisor must be a linear form");
    Element du = op_D(x, u);
    int c = du.coeff(0);
    if (c == 0) throw DivisionByZero("divisor has no x term");
    int cinv = u.field().inv(c);
    return el_sub(op_E(x, f), el_scale(cinv, el_mul(op_D(x, f), op_E(x, u))));
}

}  // namespace permbasis
