#ifndef PERMBASIS_LINALG_HPP
#define PERMBASIS_LINALG_HPP

#include <cstdint>
#include <vector>

#include "permbasis/field.hpp"

namespace permbasis {

// Dense matrix over a small finite field; entries are field indices.
class MatrixF {
public:
    MatrixF(const Field& f, int rows, int cols);

    static MatrixF identity(const Field& f, int n);

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, int v) { data_[static_cast<size_t>(i) * cols_ + j] = static_cast<uint8_t>(v); }

    std::vector<int> row(int i) const;
    MatrixF transpose() const;

    bool operator==(const MatrixF& o) const;
    bool operator!=(const MatrixF& o) const { return !(*this == o); }

private:
    const Field* f_;
    int rows_;
    int cols_;
    std::vector<uint8_t> data_;
};

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);

// In-place reduced row echelon form; returns the rank.
int rref(MatrixF& m);

// RREF with zero rows dropped: the canonical basis of the row space.
MatrixF row_space_basis(const MatrixF& m);

int rank(const MatrixF& m);

int determinant(const MatrixF& m);

// Canonical (RREF) basis of {x : m x = 0}, one solution per row.
MatrixF kernel_basis(const MatrixF& m);

// Whether v lies in the row space of an RREF basis.
bool in_row_space(const MatrixF& rref_basis, const std::vector<int>& v);

// Vertical / horizontal concatenation.
MatrixF vstack(const MatrixF& a, const MatrixF& b);
MatrixF hstack(const MatrixF& a, const MatrixF& b);

}  // namespace permbasis

#endif
