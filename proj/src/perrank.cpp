#include "permbasis/perrank.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "permbasis/element.hpp"

namespace permbasis {

int permanent_naive(const MatrixF& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("permanent of a non-square matrix");
    int n = M.rows();
    if (n > 10) throw std::invalid_argument("naive permanent capped at size 10");
    const Field& F = M.field();
    if (n == 0) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int acc = 0;
    do {
        int prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod = F.mul(prod, M.at(i, perm[i]));
        acc = F.add(acc, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

int permanent(const MatrixF& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("permanent of a non-square matrix");
    int n = M.rows();
    if (n > MAX_VARS) throw std::invalid_argument("permanent capped at size 24");
    const Field& F = M.field();
    if (n == 0) return 1;

    // per(M) = sum over nonempty column subsets S of
    //   (-1)^{n-|S|} prod_i (sum_{j in S} M[i][j]),
    // visiting subsets in Gray-code order so each step adjusts the row
    // sums by a single column.
    std::vector<int> sums(n, 0);
    uint32_t prev = 0;
    int acc = 0;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        uint32_t gray = s ^ (s >> 1);
        uint32_t flipped = gray ^ prev;
        int j = std::countr_zero(flipped);
        bool added = gray & flipped;
        for (int i = 0; i < n; ++i)
            sums[i] = added ? F.add(sums[i], M.at(i, j)) : F.sub(sums[i], M.at(i, j));
        prev = gray;

        int prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod = F.mul(prod, sums[i]);
        if (prod == 0) continue;
        if ((n - std::popcount(gray)) & 1) prod = F.neg(prod);
        acc = F.add(acc, prod);
    }
    return acc;
}

std::vector<uint8_t> row_product_layer(const MatrixF& M, const std::vector<int>& rows) {
    int n = M.cols();
    if (n > MAX_VARS) throw std::invalid_argument("row product capped at 24 columns");
    const Field& F = M.field();
    size_t cells = size_t(1) << n;
    std::vector<uint8_t> buf(cells, 0);
    buf[0] = 1;
    if (static_cast<int>(rows.size()) > n) {
        buf[0] = 0;  // degree exceeds the top grading: identically zero
        return buf;
    }
    for (size_t step = 1; step <= rows.size(); ++step) {
        const int r = rows[step - 1];
        // gather pass over the popcount == step layer (Gosper order)
        uint32_t mask = (1u << step) - 1;
        uint32_t limit = static_cast<uint32_t>(cells);
        while (mask < limit) {
            int acc = 0;
            for (uint32_t rest = mask; rest; rest &= rest - 1) {
                int j = std::countr_zero(rest);
                int c = M.at(r, j);
                if (c != 0) acc = F.add(acc, F.mul(buf[mask ^ (1u << j)], c));
            }
            buf[mask] = static_cast<uint8_t>(acc);
            uint32_t u = mask & (0 - mask);
            uint32_t w = mask + u;
            mask = w | (((mask ^ w) >> 2) / u);
        }
    }
    return buf;
}

bool row_product_nonzero(const MatrixF& M, const std::vector<int>& rows) {
    auto layer = row_product_layer(M, rows);
    if (rows.empty()) return layer[0] != 0;
    int k = static_cast<int>(rows.size());
    if (k > M.cols()) return false;
    uint32_t mask = (1u << k) - 1;
    uint32_t limit = static_cast<uint32_t>(size_t(1) << M.cols());
    while (mask < limit) {
        if (layer[mask] != 0) return true;
        uint32_t u = mask & (0 - mask);
        uint32_t w = mask + u;
        mask = w | (((mask ^ w) >> 2) / u);
    }
    return false;
}

namespace {

bool any_subset_product(const MatrixF& A, int k) {
    // k-subsets of A's rows in lexicographic order
    int m = A.rows();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (row_product_nonzero(A, idx)) return true;
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) return false;
        ++idx[j];
        for (int i = j + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

int perrank(const MatrixF& M) {
    MatrixF A = M.rows() <= M.cols() ? M : M.transpose();
    if (A.cols() > MAX_VARS)
        throw std::invalid_argument("perrank capped at 24 on the longer side");
    for (int k = A.rows(); k >= 1; --k)
        if (any_subset_product(A, k)) return k;
    return 0;
}

bool full_perrank(const MatrixF& M) {
    MatrixF A = M.rows() <= M.cols() ? M : M.transpose();
    if (A.cols() > MAX_VARS)
        throw std::invalid_argument("full perrank capped at 24 on the longer side");
    std::vector<int> all(A.rows());
    std::iota(all.begin(), all.end(), 0);
    return row_product_nonzero(A, all);
}

MatrixF stack_matrix(const std::vector<MatrixF>& blocks, int repeats) {
    if (blocks.empty()) throw std::invalid_argument("no blocks to stack");
    if (repeats < 1) throw std::invalid_argument("repeats must be positive");
    int n = blocks[0].rows();
    for (const auto& b : blocks) {
        if (b.field() != blocks[0].field()) throw FieldMismatch("blocks from different fields");
        if (b.rows() != n || b.cols() != n)
            throw std::invalid_argument("blocks must be square and same-sized");
    }
    MatrixF band = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) band = hstack(band, blocks[i]);
    MatrixF out = band;
    for (int r = 1; r < repeats; ++r) out = vstack(out, band);
    return out;
}

}  // namespace permbasis
