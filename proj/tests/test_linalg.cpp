#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "permbasis/linalg.hpp"
#include "permbasis/rng.hpp"

using namespace permbasis;

namespace {

MatrixF from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    MatrixF m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

MatrixF random_matrix(const Field& f, int r, int c, SplitMix64& rng) {
    MatrixF m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, static_cast<int>(rng.below(f.order())));
    return m;
}

// Signed permutation expansion; oracle for small sizes.
int det_oracle(const MatrixF& m) {
    const Field& f = m.field();
    int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        int prod = 1;
        for (int i = 0; i < n; ++i) prod = f.mul(prod, m.at(i, perm[i]));
        total = f.add(total, (inv % 2) ? f.neg(prod) : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("identity and multiplication basics") {
    const Field& f = gf(3);
    MatrixF I = MatrixF::identity(f, 3);
    MatrixF A = from_rows(f, {{1, 2, 0}, {0, 1, 1}, {2, 2, 2}});
    CHECK(mat_mul(I, A) == A);
    CHECK(mat_mul(A, I) == A);
    MatrixF B = from_rows(f, {{1, 1}, {2, 0}, {0, 2}});
    MatrixF AB = mat_mul(A, B);
    CHECK(AB.rows() == 3);
    CHECK(AB.cols() == 2);
    // row 0: (1,2,0)*cols -> (1*1+2*2, 1*1+2*0) = (5,1) = (2,1)
    CHECK(AB.at(0, 0) == 2);
    CHECK(AB.at(0, 1) == 1);
}

TEST_CASE("multiplication is associative and transposes contravariantly") {
    SplitMix64 rng(12);
    const Field& f = gf(5);
    for (int iter = 0; iter < 30; ++iter) {
        MatrixF a = random_matrix(f, 3, 4, rng);
        MatrixF b = random_matrix(f, 4, 2, rng);
        MatrixF c = random_matrix(f, 2, 5, rng);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        CHECK(mat_mul(a, b).transpose() == mat_mul(b.transpose(), a.transpose()));
    }
}

TEST_CASE("rref reaches a canonical reduced form") {
    const Field& f = gf(3);
    MatrixF A = from_rows(f, {{0, 1, 2}, {1, 1, 1}, {1, 2, 0}});
    MatrixF R = A;
    CHECK(rref(R) == 2);
    // canonical: pivots 1 with zeros above and below
    CHECK(R.at(0, 0) == 1);
    CHECK(R.at(0, 1) == 0);
    CHECK(R.at(1, 1) == 1);
    CHECK(R.at(2, 0) == 0);
    CHECK(R.at(2, 1) == 0);
    CHECK(R.at(2, 2) == 0);
    MatrixF R2 = R;
    CHECK(rref(R2) == 2);
    CHECK(R2 == R);  // idempotent

    SplitMix64 rng(77);
    for (int iter = 0; iter < 40; ++iter) {
        MatrixF m = random_matrix(gf(9), 4, 6, rng);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("row_space_basis canonicalizes span representations") {
    const Field& f = gf(3);
    MatrixF A = from_rows(f, {{1, 1, 0}, {0, 0, 1}});
    MatrixF B = from_rows(f, {{2, 2, 1}, {1, 1, 2}, {0, 0, 2}});  // same row space
    CHECK(row_space_basis(A) == row_space_basis(B));
    CHECK(row_space_basis(B).rows() == 2);
    CHECK(in_row_space(row_space_basis(A), {2, 2, 2}));
    CHECK_FALSE(in_row_space(row_space_basis(A), {1, 2, 0}));
}

TEST_CASE("determinant matches the signed permutation expansion") {
    SplitMix64 rng(404);
    for (int q : {3, 5, 9}) {
        const Field& f = gf(q);
        for (int n = 1; n <= 4; ++n)
            for (int iter = 0; iter < 25; ++iter) {
                MatrixF m = random_matrix(f, n, n, rng);
                CHECK(determinant(m) == det_oracle(m));
            }
    }
}

TEST_CASE("determinant is multiplicative and detects singularity") {
    const Field& f = gf(7);
    SplitMix64 rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        MatrixF a = random_matrix(f, 3, 3, rng);
        MatrixF b = random_matrix(f, 3, 3, rng);
        CHECK(determinant(mat_mul(a, b)) == f.mul(determinant(a), determinant(b)));
        CHECK((determinant(a) != 0) == (rank(a) == 3));
    }
    CHECK(determinant(MatrixF::identity(f, 5)) == 1);
}

TEST_CASE("kernel_basis spans the null space exactly") {
    SplitMix64 rng(2718);
    for (int q : {3, 5}) {
        const Field& f = gf(q);
        for (int iter = 0; iter < 30; ++iter) {
            int r = 1 + static_cast<int>(rng.below(4));
            int c = 1 + static_cast<int>(rng.below(5));
            MatrixF m = random_matrix(f, r, c, rng);
            MatrixF K = kernel_basis(m);
            CHECK(K.rows() == c - rank(m));  // rank-nullity
            if (K.rows() > 0) {
                MatrixF prod = mat_mul(m, K.transpose());
                for (int i = 0; i < prod.rows(); ++i)
                    for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
                CHECK(rank(K) == K.rows());
            }
        }
    }
    CHECK(kernel_basis(MatrixF::identity(gf(3), 4)).rows() == 0);
}

TEST_CASE("stacking concatenates blocks") {
    const Field& f = gf(3);
    MatrixF A = from_rows(f, {{1, 2}});
    MatrixF B = from_rows(f, {{0, 1}, {2, 2}});
    MatrixF V = vstack(A, B);
    CHECK(V.rows() == 3);
    CHECK(V.cols() == 2);
    CHECK(V.at(0, 1) == 2);
    CHECK(V.at(2, 0) == 2);
    MatrixF H = hstack(B, B);
    CHECK(H.rows() == 2);
    CHECK(H.cols() == 4);
    CHECK(H.at(1, 0) == 2);
    CHECK(H.at(1, 2) == 2);
}

TEST_CASE("shape or field mismatches are rejected") {
    MatrixF a(gf(3), 2, 3);
    MatrixF b(gf(3), 2, 3);
    MatrixF c(gf(5), 3, 2);
    CHECK_THROWS_AS((void)mat_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS((void)mat_mul(a, c), FieldMismatch);
    CHECK_THROWS_AS((void)vstack(a, b.transpose()), std::invalid_argument);
    CHECK_THROWS_AS((void)determinant(a), std::invalid_argument);
}
