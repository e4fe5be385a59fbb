#include "permbasis/graded.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace permbasis {

std::vector<uint32_t> degree_masks(int m, int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > m) return out;
    out.reserve(static_cast<size_t>(binomial(m, k)));
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        out.push_back(mask);
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

long long binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

namespace {

std::unordered_map<uint32_t, int> mask_index(const std::vector<uint32_t>& masks) {
    std::unordered_map<uint32_t, int> idx;
    idx.reserve(masks.size());
    for (size_t i = 0; i < masks.size(); ++i) idx.emplace(masks[i], static_cast<int>(i));
    return idx;
}

}  // namespace

GradedSubspace::GradedSubspace(const Field& f, int m, int k, const MatrixF& vectors)
    : f_(&f), m_(m), k_(k), basis_(row_space_basis(vectors)) {
    if (vectors.field() != f) throw FieldMismatch("basis field differs");
    if (vectors.cols() != binomial(m, k))
        throw std::invalid_argument("coordinate length is not the monomial count");
}

GradedSubspace GradedSubspace::zero(const Field& f, int m, int k) {
    return GradedSubspace(f, m, k, MatrixF(f, 0, static_cast<int>(binomial(m, k))));
}

GradedSubspace GradedSubspace::full(const Field& f, int m, int k) {
    return GradedSubspace(f, m, k, MatrixF::identity(f, static_cast<int>(binomial(m, k))));
}

GradedSubspace GradedSubspace::span(const std::vector<Element>& elems, int k) {
    if (elems.empty()) throw std::invalid_argument("span of an empty element list");
    const Field& f = elems[0].field();
    int m = elems[0].nvars();
    MatrixF rows(f, static_cast<int>(elems.size()), static_cast<int>(binomial(m, k)));
    for (size_t i = 0; i < elems.size(); ++i) {
        auto v = coords_of(elems[i], k);
        for (size_t j = 0; j < v.size(); ++j) rows.set(static_cast<int>(i), static_cast<int>(j), v[j]);
    }
    return GradedSubspace(f, m, k, rows);
}

bool GradedSubspace::contains(const Element& e) const {
    if (e.field() != *f_ || e.nvars() != m_)
        throw std::invalid_argument("element from a different ambient algebra");
    return in_row_space(basis_, coords_of(e, k_));
}

Element GradedSubspace::basis_element(int i) const {
    return element_of(*f_, m_, k_, basis_.row(i));
}

std::vector<int> coords_of(const Element& e, int k) {
    auto masks = degree_masks(e.nvars(), k);
    auto idx = mask_index(masks);
    std::vector<int> v(masks.size(), 0);
    for (const auto& [vars, c] : e.terms())
        if (std::popcount(vars) == k) v[idx.at(vars)] = c;
    return v;
}

Element element_of(const Field& f, int m, int k, const std::vector<int>& coords) {
    auto masks = degree_masks(m, k);
    if (coords.size() != masks.size()) throw std::invalid_argument("coordinate length mismatch");
    Element e(f, m);
    for (size_t i = 0; i < masks.size(); ++i)
        if (coords[i] != 0) e = el_add(e, Element::monomial(f, m, masks[i], coords[i]));
    return e;
}

namespace {

void check_gens(const std::vector<Element>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    for (const auto& g : gens) {
        if (g.field() != gens[0].field() || g.nvars() != gens[0].nvars())
            throw std::invalid_argument("generators from different ambient algebras");
    }
}

// Matrix of "multiply by the degree-d part of g" from A_k to A_{k+d};
// columns indexed by degree-k monomials.
MatrixF mult_map(const Element& g, int d, int k) {
    const Field& F = g.field();
    int m = g.nvars();
    auto src = degree_masks(m, k);
    auto dst = degree_masks(m, k + d);
    auto dst_idx = mask_index(dst);
    MatrixF M(F, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        for (const auto& [vars, c] : g.terms()) {
            if (std::popcount(vars) != d) continue;
            if (vars & src[j]) continue;
            M.set(dst_idx.at(vars | src[j]), static_cast<int>(j), c);
        }
    }
    return M;
}

}  // namespace

GradedSubspace annihilator_k(const std::vector<Element>& gens, int k) {
    check_gens(gens);
    const Field& F = gens[0].field();
    int m = gens[0].nvars();
    int nk = static_cast<int>(binomial(m, k));
    MatrixF stacked(F, 0, nk);
    for (const auto& g : gens) {
        for (int d = 0; d <= g.degree(); ++d) {
            if (graded_component(g, d).is_zero()) continue;
            if (k + d > m) continue;  // zero map
            stacked = vstack(stacked, mult_map(g, d, k));
        }
    }
    if (stacked.rows() == 0) return GradedSubspace::full(F, m, k);
    return GradedSubspace(F, m, k, kernel_basis(stacked));
}

GradedSubspace ideal_component_k(const std::vector<Element>& gens, int k) {
    check_gens(gens);
    const Field& F = gens[0].field();
    int m = gens[0].nvars();
    int nk = static_cast<int>(binomial(m, k));
    std::vector<std::vector<int>> prods;
    for (const auto& g : gens) {
        for (int d = 0; d <= g.degree() && d <= k; ++d) {
            Element gd = graded_component(g, d);
            if (gd.is_zero()) continue;
            // span of gd * (each degree (k-d) monomial)
            for (uint32_t h : degree_masks(m, k - d))
                prods.push_back(coords_of(el_mul(gd, Element::monomial(F, m, h, 1)), k));
        }
    }
    MatrixF rows(F, static_cast<int>(prods.size()), nk);
    for (size_t i = 0; i < prods.size(); ++i)
        for (int j = 0; j < nk; ++j) rows.set(static_cast<int>(i), j, prods[i][j]);
    return GradedSubspace(F, m, k, rows);
}

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.field() != b.field() || a.nvars() != b.nvars() || a.degree() != b.degree())
        throw std::invalid_argument("subspaces of different ambient spaces");
    return a.basis() == b.basis();
}

}  // namespace permbasis
