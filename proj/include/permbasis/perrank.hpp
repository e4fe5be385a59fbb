#ifndef PERMBASIS_PERRANK_HPP
#define PERMBASIS_PERRANK_HPP

#include <cstdint>
#include <vector>

#include "permbasis/linalg.hpp"

namespace permbasis {

// Sum over permutations of entry products; oracle implementation,
// refuses above size 10.
int permanent_naive(const MatrixF& M);

// Inclusion-exclusion over column subsets with Gray-code updates of the
// running column sums (division-free, valid over any field); size <= 24.
int permanent(const MatrixF& M);

// Dense coefficient layer of the product of the selected row linear
// forms, indexed by variable mask; only entries whose popcount equals
// rows.size() are meaningful. The coefficient at mask S is the permanent
// of the submatrix on the selected rows and the columns in S.
std::vector<uint8_t> row_product_layer(const MatrixF& M, const std::vector<int>& rows);

bool row_product_nonzero(const MatrixF& M, const std::vector<int>& rows);

// Largest k such that some k x k submatrix has nonzero permanent, found
// by testing row products over row subsets, descending in k.
int perrank(const MatrixF& M);

// perrank == min(rows, cols): a single product of all rows (of the
// transpose, when taller than wide) decides it.
bool full_perrank(const MatrixF& M);

// Horizontal band of the square blocks, repeated `repeats` times
// vertically.
MatrixF stack_matrix(const std::vector<MatrixF>& blocks, int repeats);

}  // namespace permbasis

#endif
