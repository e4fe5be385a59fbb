#include "permbasis/additive.hpp"

#include <cstring>
#include <stdexcept>

#include "permbasis/element.hpp"
#include "permbasis/perrank.hpp"

namespace permbasis {

size_t vec_index(const std::vector<int>& v, int p) {
    size_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * p + static_cast<size_t>(v[i] % p);
    return idx;
}

std::vector<int> index_vec(size_t idx, int p, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    return v;
}

ReachSet::ReachSet(int p, int n, size_t cell_cap) : p_(p), n_(n) {
    if (p < 2 || n < 0) throw std::invalid_argument("bad reachability parameters");
    size_t cells = 1;
    for (int i = 0; i < n; ++i) {
        cells *= static_cast<size_t>(p);
        if (cells > cell_cap)
            throw BudgetExceeded("reachable-set table needs more than " +
                                 std::to_string(cell_cap) + " cells");
    }
    reached_.assign(cells, 0);
    scratch_.assign(cells, 0);
    scratch2_.assign(cells, 0);
    parent_.assign(cells, -1);
    reached_[0] = 1;
}

void ReachSet::fold(const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector dimension mismatch");
    size_t cells = reached_.size();
    scratch_ = reached_;
    // shift the snapshot by v, one digit at a time: adding c to digit d
    // cyclically rotates the p sub-blocks of size p^d inside every block
    // of size p^{d+1}
    size_t stride = 1;
    for (int d = 0; d < n_; ++d, stride *= p_) {
        int c = v[d] % p_;
        if (c) {
            size_t super = stride * p_;
            for (size_t base = 0; base < cells; base += super)
                for (int r = 0; r < p_; ++r)
                    std::memcpy(scratch2_.data() + base + static_cast<size_t>((r + c) % p_) * stride,
                                scratch_.data() + base + static_cast<size_t>(r) * stride, stride);
            scratch_.swap(scratch2_);
        }
    }
    for (size_t s = 0; s < cells; ++s)
        if (scratch_[s] && !reached_[s]) {
            reached_[s] = 1;
            parent_[s] = static_cast<int16_t>(folds_);
        }
    ++folds_;
}

long long ReachSet::count() const {
    long long c = 0;
    for (uint8_t b : reached_) c += b;
    return c;
}

bool ReachSet::all_reached() const {
    for (uint8_t b : reached_)
        if (!b) return false;
    return true;
}

std::optional<size_t> ReachSet::first_unreached() const {
    for (size_t s = 0; s < reached_.size(); ++s)
        if (!reached_[s]) return s;
    return std::nullopt;
}

namespace {

ReachSet fold_all(const std::vector<std::vector<int>>& vs, int p, int n, size_t cell_cap) {
    ReachSet r(p, n, cell_cap);
    for (const auto& v : vs) r.fold(v);
    return r;
}

}  // namespace

bool is_additive_basis(const std::vector<std::vector<int>>& vs, int p, int n, size_t cell_cap) {
    return fold_all(vs, p, n, cell_cap).all_reached();
}

std::optional<std::vector<uint8_t>> reach_backtrack(const ReachSet& r,
                                                    const std::vector<std::vector<int>>& vs,
                                                    const std::vector<int>& target) {
    int p = r.p();
    int n = r.n();
    size_t idx = vec_index(target, p);
    if (!r.is_reached(idx)) return std::nullopt;
    std::vector<uint8_t> coeffs(vs.size(), 0);
    while (idx != 0) {
        int step = r.parent(idx);
        coeffs[step] = 1;
        auto cur = index_vec(idx, p, n);
        for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - vs[step][i]) % p + p) % p;
        idx = vec_index(cur, p);
    }
    // re-verify by direct summation
    std::vector<int> sum(n, 0);
    for (size_t i = 0; i < vs.size(); ++i)
        if (coeffs[i])
            for (int j = 0; j < n; ++j) sum[j] = (sum[j] + vs[i][j]) % p;
    for (int j = 0; j < n; ++j)
        if (sum[j] != ((target[j] % p) + p) % p)
            throw std::logic_error("certificate failed re-verification");
    return coeffs;
}

std::optional<std::vector<uint8_t>> express(const std::vector<std::vector<int>>& vs, int p,
                                            const std::vector<int>& target, size_t cell_cap) {
    int n = static_cast<int>(target.size());
    ReachSet r = fold_all(vs, p, n, cell_cap);
    return reach_backtrack(r, vs, target);
}

MatrixF random_nonsingular(int n, const Field& f, SplitMix64& g) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    for (;;) {
        MatrixF m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, static_cast<int>(g.below(static_cast<uint64_t>(f.order()))));
        if (determinant(m) != 0) return m;
    }
}

std::vector<std::vector<int>> columns_of(const std::vector<MatrixF>& mats) {
    std::vector<std::vector<int>> cols;
    for (const auto& m : mats)
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<int> v(m.rows());
            for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
            cols.push_back(v);
        }
    return cols;
}

TrialReport corollary4_trial(int n, uint64_t master_seed, uint64_t trial_index,
                             int num_targets) {
    const Field& F = gf(3);
    SplitMix64 rng = SplitMix64::stream(master_seed, trial_index);

    TrialReport rep;
    rep.n = n;
    rep.master_seed = master_seed;
    rep.trial_index = trial_index;
    for (int b = 0; b < 4; ++b) rep.matrices.push_back(random_nonsingular(n, F, rng));

    if (4 * n <= MAX_VARS)
        rep.full_pr = full_perrank(stack_matrix(rep.matrices, 2));

    auto vs = columns_of(rep.matrices);
    ReachSet reach(3, n);
    for (const auto& v : vs) reach.fold(v);
    rep.additive_basis = reach.all_reached();
    if (!rep.additive_basis) {
        rep.failing_target = index_vec(*reach.first_unreached(), 3, n);
        return rep;
    }
    for (int t = 0; t < num_targets; ++t) {
        Certificate c;
        c.target.resize(n);
        for (int i = 0; i < n; ++i) c.target[i] = static_cast<int>(rng.below(3));
        auto coeffs = reach_backtrack(reach, vs, c.target);
        if (!coeffs) throw std::logic_error("saturated reachable set missed a target");
        c.coeffs = *coeffs;
        rep.certificates.push_back(std::move(c));
    }
    return rep;
}

}  // namespace permbasis
