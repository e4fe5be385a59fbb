#ifndef PERMBASIS_FORMSPACE_HPP
#define PERMBASIS_FORMSPACE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permbasis/element.hpp"
#include "permbasis/linalg.hpp"

namespace permbasis {

// Space of linear forms on m variables, given by an n x m basis matrix
// with independent rows (checked at construction).
class LinearFormSpace {
public:
    explicit LinearFormSpace(const MatrixF& basis_rows);

    const Field& field() const { return basis_.field(); }
    int dim() const { return basis_.rows(); }
    int nvars() const { return basis_.cols(); }
    const MatrixF& basis() const { return basis_; }

    Element form(int i) const;  // i-th basis row
    uint32_t support_mask() const;
    int support_size() const;

private:
    MatrixF basis_;
};

// Number of k-dim subspaces of an n-dim space over GF(q).
unsigned long long gaussian_binomial(int n, int k, int q);

inline constexpr long long MS_DEFAULT_BUDGET = 10000000;

// Minimum support size over i-dim subspaces of U, by exhaustive canonical
// RREF enumeration. Refuses when the subspace count exceeds the budget.
int ms(const LinearFormSpace& U, int i, long long budget = MS_DEFAULT_BUDGET);

// (ms_1, ..., ms_dim).
std::vector<int> ms_profile(const LinearFormSpace& U, long long budget = MS_DEFAULT_BUDGET);

// ms_i(U) >= seq[i-1] for all i; the empty sequence is vacuously covered.
bool covers(const LinearFormSpace& U, const std::vector<int>& seq,
            long long budget = MS_DEFAULT_BUDGET);

// Enumerate all full-rank k x n RREF matrices over f (canonical
// representatives of the k-dim subspaces of f^n), in a fixed order.
// Stops early if the callback returns false.
void enumerate_subspaces(const Field& f, int n, int k,
                         const std::function<bool(const MatrixF&)>& cb);

struct Lemma6Result {
    bool ok = false;
    int field_order = 0;  // field over which the chain was found
    // chain[k] is a k x m basis of U_k over gf(field_order), k = 0..n.
    std::vector<MatrixF> chain;
    std::vector<std::string> notes;  // per-field failure records
};

// Nested chain U_0 c U_1 c ... c U_n = U with dim(U_k) = k, where each
// U_k covers the length-k suffix of seq. Searched by DFS over candidate
// extension vectors in canonical coordinate order; on exhaustion over the
// base field, retried over GF(9) then GF(27) (characteristic 3 only),
// embedding the basis.
Lemma6Result lemma6_chain(const LinearFormSpace& U, const std::vector<int>& seq);

}  // namespace permbasis

#endif
