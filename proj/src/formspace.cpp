#include "permbasis/formspace.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace permbasis {

LinearFormSpace::LinearFormSpace(const MatrixF& basis_rows) : basis_(basis_rows) {
    if (basis_.cols() > MAX_VARS)
        throw std::invalid_argument("variable count above the monomial cap");
    if (rank(basis_) != basis_.rows())
        throw std::invalid_argument("basis rows are linearly dependent");
}

Element LinearFormSpace::form(int i) const {
    return Element::linear_form(basis_.field(), basis_.row(i));
}

uint32_t LinearFormSpace::support_mask() const {
    uint32_t s = 0;
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < basis_.cols(); ++j)
            if (basis_.at(i, j) != 0) s |= 1u << j;
    return s;
}

int LinearFormSpace::support_size() const { return std::popcount(support_mask()); }

unsigned long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;  // symmetric, and keeps num >= den below
    if (k == 0) return 1;
    // prod_{j=0..k-1} (q^{n-j} - 1) / (q^{j+1} - 1); the aggregate
    // quotient is integral, so divide once at the end
    unsigned __int128 num = 1, den = 1;
    auto qpow = [&](int e) {
        unsigned __int128 r = 1;
        while (e--) r *= static_cast<unsigned>(q);
        return r;
    };
    for (int j = 0; j < k; ++j) {
        num *= qpow(n - j) - 1;
        den *= qpow(j + 1) - 1;
        if (num > (static_cast<unsigned __int128>(1) << 100))
            return ~0ULL;  // saturate; only compared against small budgets
    }
    return static_cast<unsigned long long>(num / den);
}

void enumerate_subspaces(const Field& f, int n, int k,
                         const std::function<bool(const MatrixF&)>& cb) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        cb(MatrixF(f, 0, n));
        return;
    }
    int q = f.order();
    // pivot columns p_0 < ... < p_{k-1}; free entries are the positions
    // (r, c) with c > p_r, c not a pivot column
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (int i = 0; i < k; ++i) is_piv[piv[i]] = true;
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);

        std::vector<int> vals(free_pos.size(), 0);
        for (;;) {
            MatrixF M(f, k, n);
            for (int r = 0; r < k; ++r) M.set(r, piv[r], 1);
            for (size_t t = 0; t < free_pos.size(); ++t)
                M.set(free_pos[t].first, free_pos[t].second, vals[t]);
            if (!cb(M)) return;
            size_t d = 0;
            while (d < vals.size() && vals[d] == q - 1) vals[d++] = 0;
            if (d == vals.size()) break;
            ++vals[d];
        }

        int j = k - 1;
        while (j >= 0 && piv[j] == n - k + j) --j;
        if (j < 0) break;
        ++piv[j];
        for (int i = j + 1; i < k; ++i) piv[i] = piv[i - 1] + 1;
    }
}

namespace {

int subspace_support(const MatrixF& coeffs, const MatrixF& basis) {
    MatrixF rows = mat_mul(coeffs, basis);
    uint32_t s = 0;
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < rows.cols(); ++j)
            if (rows.at(i, j) != 0) s |= 1u << j;
    return std::popcount(s);
}

}  // namespace

int ms(const LinearFormSpace& U, int i, long long budget) {
    int n = U.dim();
    if (i < 1 || i > n) throw std::out_of_range("subspace dimension out of range");
    unsigned long long count = gaussian_binomial(n, i, U.field().order());
    if (count > static_cast<unsigned long long>(budget))
        throw BudgetExceeded("subspace enumeration needs " + std::to_string(count) +
                             " candidates, budget " + std::to_string(budget));
    int best = U.nvars() + 1;
    enumerate_subspaces(U.field(), n, i, [&](const MatrixF& C) {
        int s = subspace_support(C, U.basis());
        if (s < best) best = s;
        return best > 0;  // support 0 cannot be beaten
    });
    return best;
}

std::vector<int> ms_profile(const LinearFormSpace& U, long long budget) {
    std::vector<int> out(U.dim());
    for (int i = 1; i <= U.dim(); ++i) out[i - 1] = ms(U, i, budget);
    return out;
}

bool covers(const LinearFormSpace& U, const std::vector<int>& seq, long long budget) {
    if (static_cast<int>(seq.size()) > U.dim())
        throw std::invalid_argument("sequence longer than the space dimension");
    for (size_t i = 0; i < seq.size(); ++i)
        if (ms(U, static_cast<int>(i) + 1, budget) < seq[i]) return false;
    return true;
}

namespace {

// DFS level: extend the current coefficient-space chain by one vector.
struct ChainSearch {
    const Field* f;
    int q;
    int n;                 // dim of the ambient space
    const MatrixF* basis;  // n x m over *f
    const std::vector<int>* seq;
    std::vector<std::vector<int>> picked;  // coefficient vectors, one per level

    bool in_span(const std::vector<int>& v) const {
        if (picked.empty()) {
            for (int x : v)
                if (x != 0) return false;
            return true;
        }
        MatrixF M(*f, static_cast<int>(picked.size()), n);
        for (size_t i = 0; i < picked.size(); ++i)
            for (int j = 0; j < n; ++j) M.set(static_cast<int>(i), j, picked[i][j]);
        return in_row_space(row_space_basis(M), v);
    }

    MatrixF current_rows(const std::vector<int>& extra) const {
        MatrixF M(*f, static_cast<int>(picked.size()) + (extra.empty() ? 0 : 1), n);
        for (size_t i = 0; i < picked.size(); ++i)
            for (int j = 0; j < n; ++j) M.set(static_cast<int>(i), j, picked[i][j]);
        if (!extra.empty())
            for (int j = 0; j < n; ++j) M.set(static_cast<int>(picked.size()), j, extra[j]);
        return M;
    }

    bool dfs(std::vector<MatrixF>& chain_coeffs) {
        int k = static_cast<int>(picked.size());
        if (k == n) return true;
        std::set<std::vector<uint8_t>> seen;  // dedupe equal extensions U_{k+1}
        std::vector<int> v(n, 0);
        for (;;) {
            // next coordinate vector in canonical (lexicographic) order
            int d = n - 1;
            while (d >= 0 && v[d] == q - 1) v[d--] = 0;
            if (d < 0) break;
            ++v[d];

            if (in_span(v)) continue;
            MatrixF ext = row_space_basis(current_rows(v));
            std::vector<uint8_t> sig;
            sig.reserve(static_cast<size_t>(ext.rows()) * ext.cols());
            for (int i = 0; i < ext.rows(); ++i)
                for (int j = 0; j < ext.cols(); ++j) sig.push_back(static_cast<uint8_t>(ext.at(i, j)));
            if (!seen.insert(sig).second) continue;

            // U_{k+1} must cover the (k+1)-suffix of seq
            LinearFormSpace V(mat_mul(ext, *basis));
            std::vector<int> suffix(seq->end() - (k + 1), seq->end());
            if (!covers(V, suffix)) continue;

            picked.push_back(v);
            chain_coeffs.push_back(ext);
            if (dfs(chain_coeffs)) return true;
            picked.pop_back();
            chain_coeffs.pop_back();
        }
        return false;
    }
};

MatrixF embed(const MatrixF& M, const Field& target) {
    // prime-subfield indices are identical in the extension encoding
    MatrixF out(target, M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) out.set(i, j, M.at(i, j));
    return out;
}

}  // namespace

Lemma6Result lemma6_chain(const LinearFormSpace& U, const std::vector<int>& seq) {
    int n = U.dim();
    if (static_cast<int>(seq.size()) != n)
        throw std::invalid_argument("sequence length must equal dim(U)");
    for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i] <= seq[i - 1]) throw std::invalid_argument("sequence must be strictly increasing");
    if (!covers(U, seq)) throw std::invalid_argument("the space does not cover the sequence");

    Lemma6Result res;
    std::vector<int> orders;
    if (U.field().characteristic() == 3) {
        if (U.field().order() == 3) orders = {3, 9, 27};
        else if (U.field().order() == 9) orders = {9, 27};
        else orders = {27};
    } else {
        orders = {U.field().order()};
    }

    for (int q : orders) {
        const Field& F = gf(q);
        MatrixF B = embed(U.basis(), F);
        ChainSearch s{&F, q, n, &B, &seq, {}};
        std::vector<MatrixF> chain_coeffs;
        if (s.dfs(chain_coeffs)) {
            res.ok = true;
            res.field_order = q;
            res.chain.push_back(MatrixF(F, 0, U.nvars()));
            for (const auto& C : chain_coeffs) res.chain.push_back(mat_mul(C, B));
            return res;
        }
        res.notes.push_back("gf" + std::to_string(q) + ": search exhausted");
    }
    return res;
}

}  // namespace permbasis
