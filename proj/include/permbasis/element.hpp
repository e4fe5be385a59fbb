#ifndef PERMBASIS_ELEMENT_HPP
#define PERMBASIS_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permbasis/field.hpp"

namespace permbasis {

#ifndef PERMBASIS_MAX_VARS
#define PERMBASIS_MAX_VARS 24
#endif
inline constexpr int MAX_VARS = PERMBASIS_MAX_VARS;
static_assert(MAX_VARS <= 31, "monomial sets must fit a machine word");

// Canonical monomial order: lexicographic on the sorted variable index
// sets. Note this differs from numeric mask order ({1,4} precedes {2,3}).
bool mask_lex_less(uint32_t a, uint32_t b);

// Member of the squarefree quotient algebra on nvars variables: a sparse
// map from monomials (variable subsets, bit i-1 <-> x_i) to nonzero
// coefficients. x_i^2 = 0, so a term product vanishes whenever the
// variable sets intersect. Immutable after construction.
class Element {
public:
    Element(const Field& f, int nvars);

    static Element monomial(const Field& f, int nvars, uint32_t vars, int coeff);
    static Element constant(const Field& f, int nvars, int coeff);
    static Element variable(const Field& f, int nvars, int i);  // x_i, 1-based
    // Linear form sum coeffs[j]*x_{j+1}; nvars = coeffs.size().
    static Element linear_form(const Field& f, const std::vector<int>& coeffs);

    const Field& field() const { return *f_; }
    int nvars() const { return m_; }
    const std::map<uint32_t, int>& terms() const { return terms_; }
    int coeff(uint32_t vars) const;
    bool is_zero() const { return terms_.empty(); }
    // Max term degree; -1 for the zero element.
    int degree() const;
    bool is_homogeneous() const;
    // Union of the variable sets across terms.
    uint32_t support_mask() const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Terms in canonical order, e.g. "2*x1*x2 + x3"; "0" when empty.
    // Extension coefficients with more than one summand are parenthesized.
    std::string str() const;

private:
    friend Element el_add(const Element&, const Element&);
    friend Element el_sub(const Element&, const Element&);
    friend Element el_scale(int, const Element&);
    friend Element el_mul(const Element&, const Element&);
    friend Element op_E(int, const Element&);
    friend Element op_D(int, const Element&);
    friend Element graded_component(const Element&, int);

    void set(uint32_t vars, int coeff);  // drops zero
    void accumulate(uint32_t vars, int coeff);

    const Field* f_;
    int m_;
    std::map<uint32_t, int> terms_;
};

Element el_add(const Element& f, const Element& g);
Element el_sub(const Element& f, const Element& g);
Element el_scale(int c, const Element& f);
Element el_mul(const Element& f, const Element& g);

// Drop every term containing x_i.
Element op_E(int i, const Element& f);
// Formal quotient on division by x_i: keep terms containing x_i, remove x_i.
Element op_D(int i, const Element& f);
// Degree-k part.
Element graded_component(const Element& f, int k);

// Remainder of dividing f by the linear form u with respect to variable x
// (1-based), requiring c = op_D(x, u) != 0:
//   r = E_x f - c^{-1} (D_x f)(E_x u),
// which satisfies D_x r = 0 and f - r = c^{-1} (D_x f) u, an ideal member.
Element reduce_R(const Element& u, int x, const Element& f);

}  // namespace permbasis

#endif
