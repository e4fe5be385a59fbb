#include "permbasis/linalg.hpp"

#include <stdexcept>

namespace permbasis {

MatrixF::MatrixF(const Field& f, int rows, int cols)
    : f_(&f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

MatrixF MatrixF::identity(const Field& f, int n) {
    MatrixF m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<int> MatrixF::row(int i) const {
    std::vector<int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

MatrixF MatrixF::transpose() const {
    MatrixF t(*f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool MatrixF::operator==(const MatrixF& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrices from different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
    const Field& F = a.field();
    MatrixF c(F, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.set(i, j, F.add(c.at(i, j), F.mul(aik, b.at(k, j))));
        }
    return c;
}

int rref(MatrixF& m) {
    const Field& F = m.field();
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) {
                int t = m.at(r, j);
                m.set(r, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        int inv = F.inv(m.at(r, col));
        for (int j = col; j < m.cols(); ++j) m.set(r, j, F.mul(inv, m.at(r, j)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            int c = m.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(c, m.at(r, j))));
        }
        ++r;
    }
    return r;
}

MatrixF row_space_basis(const MatrixF& m) {
    MatrixF w = m;
    int r = rref(w);
    MatrixF b(m.field(), r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) b.set(i, j, w.at(i, j));
    return b;
}

int rank(const MatrixF& m) {
    MatrixF w = m;
    return rref(w);
}

int determinant(const MatrixF& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const Field& F = m.field();
    MatrixF w = m;
    int n = m.rows();
    int det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                int t = w.at(col, j);
                w.set(col, j, w.at(piv, j));
                w.set(piv, j, t);
            }
            det = F.neg(det);
        }
        int p = w.at(col, col);
        det = F.mul(det, p);
        int inv = F.inv(p);
        for (int i = col + 1; i < n; ++i) {
            int c = w.at(i, col);
            if (c == 0) continue;
            int factor = F.mul(c, inv);
            for (int j = col; j < n; ++j)
                w.set(i, j, F.sub(w.at(i, j), F.mul(factor, w.at(col, j))));
        }
    }
    return det;
}

MatrixF kernel_basis(const MatrixF& m) {
    const Field& F = m.field();
    MatrixF w = m;
    int r = rref(w);
    std::vector<int> pivot_col(r, -1);
    std::vector<bool> is_pivot(m.cols(), false);
    int pr = 0;
    for (int col = 0; col < m.cols() && pr < r; ++col) {
        if (w.at(pr, col) != 0) {
            pivot_col[pr] = col;
            is_pivot[col] = true;
            ++pr;
        }
    }
    MatrixF k(F, m.cols() - r, m.cols());
    int out = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        k.set(out, free, 1);
        for (int i = 0; i < r; ++i) k.set(out, pivot_col[i], F.neg(w.at(i, free)));
        ++out;
    }
    return row_space_basis(k);
}

bool in_row_space(const MatrixF& rref_basis, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != rref_basis.cols())
        throw std::invalid_argument("vector length differs from ambient dimension");
    const Field& F = rref_basis.field();
    std::vector<int> w = v;
    for (int i = 0; i < rref_basis.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < rref_basis.cols(); ++j)
            if (rref_basis.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        int c = w[lead];
        if (c == 0) continue;
        for (int j = lead; j < rref_basis.cols(); ++j)
            w[j] = F.sub(w[j], F.mul(c, rref_basis.at(i, j)));
    }
    for (int x : w)
        if (x != 0) return false;
    return true;
}

MatrixF vstack(const MatrixF& a, const MatrixF& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrices from different fields");
    if (a.cols() != b.cols()) throw std::invalid_argument("column counts differ");
    MatrixF m(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.set(a.rows() + i, j, b.at(i, j));
    return m;
}

MatrixF hstack(const MatrixF& a, const MatrixF& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrices from different fields");
    if (a.rows() != b.rows()) throw std::invalid_argument("row counts differ");
    MatrixF m(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    return m;
}

}  // namespace permbasis
