#ifndef PERMBASIS_ADDITIVE_HPP
#define PERMBASIS_ADDITIVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "permbasis/linalg.hpp"
#include "permbasis/rng.hpp"

namespace permbasis {

inline constexpr size_t REACH_DEFAULT_CELL_CAP = 5000000;

// Encode a Z_p^n vector as an index, coordinate i as base-p digit i.
size_t vec_index(const std::vector<int>& v, int p);
std::vector<int> index_vec(size_t idx, int p, int n);

// Subset-sum reachable set over Z_p^n with parent pointers: parent[s] is
// the fold step at which s was first reached (-1 unreached, origin 0 is
// reached from the start). A sum reached at step i decomposes as
// (something reachable before step i) + v_i, so following parents yields
// strictly decreasing steps and hence 0/1 coefficients.
class ReachSet {
public:
    ReachSet(int p, int n, size_t cell_cap = REACH_DEFAULT_CELL_CAP);

    int p() const { return p_; }
    int n() const { return n_; }
    size_t cells() const { return reached_.size(); }
    int folds() const { return folds_; }

    // reach <- reach union (reach + v); v has n coordinates mod p.
    void fold(const std::vector<int>& v);

    bool is_reached(size_t idx) const { return reached_[idx] != 0; }
    int parent(size_t idx) const { return parent_[idx]; }
    long long count() const;
    bool all_reached() const;
    // Smallest-index unreached cell, if any.
    std::optional<size_t> first_unreached() const;

private:
    int p_;
    int n_;
    int folds_ = 0;
    std::vector<uint8_t> reached_;
    std::vector<uint8_t> scratch_;
    std::vector<uint8_t> scratch2_;
    std::vector<int16_t> parent_;
};

// Whether every element of Z_p^n is a 0/1-combination of vs.
bool is_additive_basis(const std::vector<std::vector<int>>& vs, int p, int n,
                       size_t cell_cap = REACH_DEFAULT_CELL_CAP);

// 0/1 coefficients with sum(c_i v_i) = target, first-fit tie-break in
// vector order; nullopt when unreachable. Certificates are re-verified
// by direct summation before being returned.
std::optional<std::vector<uint8_t>> express(const std::vector<std::vector<int>>& vs, int p,
                                            const std::vector<int>& target,
                                            size_t cell_cap = REACH_DEFAULT_CELL_CAP);

// Backtrack a certificate out of an already-folded reach set (r must
// have been built by folding exactly vs, in order).
std::optional<std::vector<uint8_t>> reach_backtrack(const ReachSet& r,
                                                    const std::vector<std::vector<int>>& vs,
                                                    const std::vector<int>& target);

// Uniform nonsingular matrix by rejection sampling.
MatrixF random_nonsingular(int n, const Field& f, SplitMix64& g);

// Column vectors of the given matrices, in matrix order then column order.
std::vector<std::vector<int>> columns_of(const std::vector<MatrixF>& mats);

struct Certificate {
    std::vector<int> target;
    std::vector<uint8_t> coeffs;
};

struct TrialReport {
    int n = 0;
    uint64_t master_seed = 0;
    uint64_t trial_index = 0;
    std::vector<MatrixF> matrices;  // the four drawn nonsingular blocks
    // Nullopt when 4n exceeds the row-product variable cap.
    std::optional<bool> full_pr;
    bool additive_basis = false;
    std::optional<std::vector<int>> failing_target;
    std::vector<Certificate> certificates;
};

// One randomized trial over Z_3^n: draw four nonsingular blocks, check
// that the stacked band with two repeats has full perrank (when within
// the variable cap) and that the 4n block columns form an additive
// basis, with `num_targets` verified sample certificates.
TrialReport corollary4_trial(int n, uint64_t master_seed, uint64_t trial_index,
                             int num_targets);

}  // namespace permbasis

#endif
