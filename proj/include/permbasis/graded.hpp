#ifndef PERMBASIS_GRADED_HPP
#define PERMBASIS_GRADED_HPP

#include <cstdint>
#include <vector>

#include "permbasis/element.hpp"
#include "permbasis/linalg.hpp"

namespace permbasis {

// All degree-k monomials on m variables in canonical order
// (lexicographic on sorted variable index sets).
std::vector<uint32_t> degree_masks(int m, int k);

// C(m, k).
long long binomial(int m, int k);

// Subspace of the degree-k component, held as an RREF basis over the
// canonical monomial coordinates.
class GradedSubspace {
public:
    // Rows of `vectors` are coordinate vectors; reduced on construction.
    GradedSubspace(const Field& f, int m, int k, const MatrixF& vectors);

    static GradedSubspace zero(const Field& f, int m, int k);
    static GradedSubspace full(const Field& f, int m, int k);
    static GradedSubspace span(const std::vector<Element>& elems, int k);

    const Field& field() const { return *f_; }
    int nvars() const { return m_; }
    int degree() const { return k_; }
    int dim() const { return basis_.rows(); }
    const MatrixF& basis() const { return basis_; }

    bool contains(const Element& e) const;
    Element basis_element(int i) const;

private:
    const Field* f_;
    int m_;
    int k_;
    MatrixF basis_;
};

// Coordinates of the degree-k part of e (canonical monomial order).
std::vector<int> coords_of(const Element& e, int k);
Element element_of(const Field& f, int m, int k, const std::vector<int>& coords);

// {f in A_k : f*g = 0 for every g in gens}. A homogeneous component of a
// generator whose degree pushes past the top dimension contributes a zero
// map, so e.g. annihilator_k of high-degree gens is all of A_k.
GradedSubspace annihilator_k(const std::vector<Element>& gens, int k);

// Degree-k slice of the ideal generated by gens.
GradedSubspace ideal_component_k(const std::vector<Element>& gens, int k);

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b);

}  // namespace permbasis

#endif
