#ifndef PERMBASIS_VERIFY_HPP
#define PERMBASIS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permbasis/additive.hpp"
#include "permbasis/formspace.hpp"

namespace permbasis {

// One checked statement instance. Statement ids: thm5.1, thm5.2, lemma6,
// thm7.A, thm7.B, thm7.reduction, thm3, cor4, conj2, basis. `vacuous`
// marks instances whose hypothesis never applied; those are skipped, not
// passed-by-courtesy, and never carry a counterexample.
struct CheckOutcome {
    std::string statement;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    bool vacuous = false;
    nlohmann::json counterexample;  // null unless passed == false
    nlohmann::json stats = nlohmann::json::object();
};

// Single-line report object. stats.elapsed_ms is wall time and is the
// only field excluded from byte-level determinism.
nlohmann::json outcome_json(const CheckOutcome& o);

// Annihilator/ideal slice equality for a single linear form over GF(3):
// part 1 compares the annihilator of u against the ideal slice of u^2
// (needs support >= 2k+1), part 2 the reverse pairing (>= 2k+2).
// Returns the two per-part outcomes.
std::vector<CheckOutcome> check_theorem5(int m, int k, const std::vector<int>& u_coeffs);

// All canonical linear forms (first nonzero coefficient 1) on up to
// m <= 7 variables, all degrees k <= k_max; two aggregate outcomes.
std::vector<CheckOutcome> check_theorem5_exhaustive(int m, int k_max);

CheckOutcome check_lemma6(const LinearFormSpace& U, const std::vector<int>& seq);

// Random spaces checked against their own ms profiles.
std::vector<CheckOutcome> check_lemma6_random(int count, int max_dim, int max_m, uint64_t seed,
                                              int jobs = 1);

CheckOutcome check_theorem7(const LinearFormSpace& U, int k, char part);

// Exhaustive one-dimensional spaces on m variables (same canonical
// form iteration as check_theorem5_exhaustive); aggregate outcome.
CheckOutcome check_theorem7_exhaustive_n1(int m, int k, char part);

// Random n-dim spaces with m in [m_min, m_max], rejection-sampled until
// the ms profile dominates min_ms.
std::vector<CheckOutcome> check_theorem7_random(int count, int n, int m_min, int m_max, int k,
                                                char part, const std::vector<int>& min_ms,
                                                uint64_t seed, int jobs = 1);

// Span comparison between random 2n-fold products from U and the single
// generator (product of squared basis forms).
std::vector<CheckOutcome> check_u2n_reduction(int count, int max_n, int max_m, int samples,
                                              uint64_t seed, int jobs = 1);

// Stacked nonsingular blocks [P R S T] repeated twice have full perrank;
// exhaustive at n = 1, seeded trials otherwise, with the ms_i >= 4i row
// space bound verified for n <= 3.
std::vector<CheckOutcome> check_main_theorem(int n, int trials, uint64_t seed, int jobs = 1);

// Column multisets of four random nonsingular blocks as additive bases
// of Z_3^n with verified sample certificates.
std::vector<CheckOutcome> check_corollary4(int n, int trials, int targets, uint64_t seed,
                                           int jobs = 1);

// Evidence gathering for the p-block stack with p-1 repeats, p in {3,5};
// exhaustive at n = 1, seeded trials otherwise.
std::vector<CheckOutcome> conjecture2_check(int p, int n, int trials, uint64_t seed,
                                            int jobs = 1);

// Re-run the instance recorded in a serialized report and return the
// recomputed pass/fail status.
bool replay_outcome(const nlohmann::json& report);

// Deterministic fan-out: fn(i) for i in [0, count), results in index
// order regardless of scheduling.
std::vector<CheckOutcome> run_indexed(int count, int jobs,
                                      const std::function<CheckOutcome(int)>& fn);

}  // namespace permbasis

#endif
