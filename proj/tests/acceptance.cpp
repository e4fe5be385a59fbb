// Acceptance gate: one line per criterion, nonzero exit on any failure.
// argv[1] = path to the command-line binary (used by the determinism check).
#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "permbasis/additive.hpp"
#include "permbasis/formspace.hpp"
#include "permbasis/graded.hpp"
#include "permbasis/perrank.hpp"
#include "permbasis/rng.hpp"
#include "permbasis/verify.hpp"

using namespace permbasis;
using Clock = std::chrono::steady_clock;

namespace {

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct Gate {
    int failed = 0;

    // Runs the body, then prints one verdict line with the time budget.
    void criterion(int number, const std::string& label, double budget_s,
                   const std::function<bool(std::string&)>& body) {
        auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= budget_s) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "over time budget";
        }
        char line[512];
        std::snprintf(line, sizeof line, "criterion %d: %s - %s (%.1fs of %.0fs budget)%s%s",
                      number, ok ? "PASS" : "FAIL", label.c_str(), secs, budget_s,
                      detail.empty() ? "" : " :: ", detail.c_str());
        std::cout << line << std::endl;
        if (!ok) ++failed;
    }
};

Element random_element(const Field& f, int m, SplitMix64& rng, int max_terms) {
    Element e(f, m);
    int nt = 1 + static_cast<int>(rng.below(max_terms));
    for (int i = 0; i < nt; ++i)
        e = el_add(e, Element::monomial(f, m, static_cast<uint32_t>(rng.below(1u << m)),
                                        static_cast<int>(rng.below(f.order()))));
    return e;
}

bool operator_suite(std::string& detail) {
    const Field& f = gf(3);
    SplitMix64 rng(1001);
    const int instances = 10000;
    for (int it = 0; it < instances; ++it) {
        int m = 2 + static_cast<int>(rng.below(7));  // 2..8
        std::vector<int> coeffs(m, 0);
        while (Element::linear_form(f, coeffs).is_zero())
            for (auto& c : coeffs) c = static_cast<int>(rng.below(3));
        Element u = Element::linear_form(f, coeffs);
        int x = 1 + static_cast<int>(rng.below(m));
        while (coeffs[x - 1] == 0) x = 1 + static_cast<int>(rng.below(m));

        Element a = random_element(f, m, rng, 6);
        Element b = random_element(f, m, rng, 6);
        int i = 1 + static_cast<int>(rng.below(m));
        int j = 1 + static_cast<int>(rng.below(m));

        // product rules
        if (op_E(i, el_mul(a, b)) != el_mul(op_E(i, a), op_E(i, b))) {
            detail = "E product rule failed";
            return false;
        }
        if (op_D(i, el_mul(a, b)) !=
            el_add(el_mul(op_D(i, a), op_E(i, b)), el_mul(op_E(i, a), op_D(i, b)))) {
            detail = "D product rule failed";
            return false;
        }
        // commutation for distinct indices
        if (i != j) {
            if (op_D(i, op_E(j, a)) != op_E(j, op_D(i, a)) ||
                op_D(i, op_D(j, a)) != op_D(j, op_D(i, a))) {
                detail = "operator commutation failed";
                return false;
            }
        }
        // reconstruction
        if (el_add(op_E(i, a), el_mul(Element::variable(f, m, i), op_D(i, a))) != a) {
            detail = "reconstruction failed";
            return false;
        }
        // u^3 = 0 and the difference of squares
        if (!el_mul(el_mul(u, u), u).is_zero()) {
            detail = "u^3 != 0";
            return false;
        }
        Element xv = Element::variable(f, m, x);
        if (el_mul(el_add(u, xv), el_sub(u, xv)) != el_mul(u, u)) {
            detail = "difference of squares failed";
            return false;
        }
        // reduce_R contract with a constructive ideal witness
        Element r = reduce_R(u, x, a);
        if (!op_D(x, r).is_zero()) {
            detail = "D_x(Rf) != 0";
            return false;
        }
        int cinv = f.inv(coeffs[x - 1]);
        if (el_sub(a, r) != el_mul(el_scale(cinv, op_D(x, a)), u)) {
            detail = "f - Rf is not the expected multiple of u";
            return false;
        }
    }
    detail = std::to_string(instances) + " instances";
    return true;
}

bool theorem5_gate(std::string& detail) {
    for (int m = 1; m <= 5; ++m) {
        auto outs = check_theorem5_exhaustive(m, m / 2);
        for (const auto& o : outs)
            if (!o.passed) {
                detail = "failure at m=" + std::to_string(m) + ": " + o.counterexample.dump();
                return false;
            }
    }
    // tightness at support = 2k: x1 - x2 annihilates u = x1 + x2, but the
    // degree-1 slice of (u^2) is zero
    const Field& f = gf(3);
    Element u = Element::linear_form(f, {1, 1});
    GradedSubspace kr = annihilator_k({u}, 1);
    GradedSubspace im = ideal_component_k({el_mul(u, u)}, 1);
    bool tight = kr.dim() == 1 && kr.contains(Element::linear_form(f, {1, 2})) && im.dim() == 0 &&
                 !subspace_equal(kr, im);
    if (!tight) {
        detail = "tightness witness not reproduced";
        return false;
    }
    detail = "m <= 5 exhaustive plus the m=2,k=1 tightness witness";
    return true;
}

bool theorem7_gate(std::string& detail) {
    for (int m = 1; m <= 6; ++m) {
        CheckOutcome o = check_theorem7_exhaustive_n1(m, 0, 'A');
        if (!o.passed) {
            detail = "exhaustive n=1 failure at m=" + std::to_string(m);
            return false;
        }
    }
    auto rnd = check_theorem7_random(200, 2, 6, 10, 0, 'A', {2, 6}, 1003, jobs());
    for (const auto& o : rnd)
        if (!o.passed || o.vacuous) {
            detail = "random n=2 instance failed: " + o.params.dump();
            return false;
        }
    auto red = check_u2n_reduction(200, 2, 10, 60, 1003, jobs());
    for (const auto& o : red)
        if (!o.passed) {
            detail = "span reduction failed: " + o.params.dump();
            return false;
        }
    detail = "n=1 exhaustive m <= 6, 200 random n=2, 200 reductions";
    return true;
}

bool theorem3_gate(std::string& detail) {
    auto n1 = check_main_theorem(1, 0, 0);
    if (n1.size() != 16) {
        detail = "expected 16 exhaustive instances at n=1";
        return false;
    }
    long checked_ms = 0;
    for (int n = 1; n <= 4; ++n) {
        auto outs = n == 1 ? n1 : check_main_theorem(n, 1000, 1004 + n, jobs());
        for (const auto& o : outs) {
            if (!o.passed) {
                detail = "instance failed: " + o.params.dump();
                return false;
            }
            if (n <= 3) {
                if (!o.stats.contains("ms_profile")) {
                    detail = "missing ms profile at n=" + std::to_string(n);
                    return false;
                }
                auto prof = o.stats["ms_profile"].get<std::vector<int>>();
                for (size_t i = 0; i < prof.size(); ++i)
                    if (prof[i] < 4 * static_cast<int>(i + 1)) {
                        detail = "ms floor violated: " + o.stats["ms_profile"].dump();
                        return false;
                    }
                ++checked_ms;
            }
        }
    }
    detail = "16 exhaustive + 3000 random trials; ms floors on " + std::to_string(checked_ms) +
             " row spaces";
    return true;
}

bool corollary4_gate(std::string& detail) {
    const int trials = 1000, targets = 20;
    for (int n = 2; n <= 10; ++n) {
        const uint64_t seed = 1005;
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng = SplitMix64::stream(seed + static_cast<uint64_t>(n), t);
            std::vector<MatrixF> blocks;
            for (int b = 0; b < 4; ++b) blocks.push_back(random_nonsingular(n, gf(3), rng));
            auto vs = columns_of(blocks);
            ReachSet reach(3, n);
            for (const auto& v : vs) reach.fold(v);
            if (!reach.all_reached()) {
                detail = "not a basis at n=" + std::to_string(n) + ", trial " + std::to_string(t);
                return false;
            }
            for (int g = 0; g < targets; ++g) {
                std::vector<int> target(n);
                for (auto& c : target) c = static_cast<int>(rng.below(3));
                auto coeffs = reach_backtrack(reach, vs, target);
                if (!coeffs) {
                    detail = "missing certificate at n=" + std::to_string(n);
                    return false;
                }
                std::vector<int> sum(n, 0);
                for (size_t v = 0; v < vs.size(); ++v)
                    if ((*coeffs)[v])
                        for (int c = 0; c < n; ++c) sum[c] = (sum[c] + vs[v][c]) % 3;
                if (sum != target) {
                    detail = "certificate does not sum to its target";
                    return false;
                }
            }
        }
    }
    detail = "9000 trials, 20 verified certificates each";
    return true;
}

bool permanent_gate(std::string& detail) {
    SplitMix64 rng(1006);
    for (int q : {3, 5}) {
        const Field& f = gf(q);
        for (int n = 1; n <= 7; ++n)
            for (int it = 0; it < 1000; ++it) {
                MatrixF M(f, n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        M.set(i, j, static_cast<int>(rng.below(f.order())));
                if (permanent(M) != permanent_naive(M)) {
                    detail = "permanent mismatch at size " + std::to_string(n);
                    return false;
                }
            }
    }
    for (int it = 0; it < 200; ++it) {
        int m = 1 + static_cast<int>(rng.below(5));
        int n = m + static_cast<int>(rng.below(11 - m));
        MatrixF M(gf(3), m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) M.set(i, j, static_cast<int>(rng.below(3)));
        std::vector<int> rows(m);
        for (int i = 0; i < m; ++i) rows[i] = i;
        auto layer = row_product_layer(M, rows);
        for (uint32_t S = 0; S < (1u << n); ++S) {
            if (std::popcount(S) != m) continue;
            std::vector<int> cols;
            for (int j = 0; j < n; ++j)
                if (S & (1u << j)) cols.push_back(j);
            MatrixF minor(gf(3), m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) minor.set(i, j, M.at(i, cols[j]));
            if (static_cast<int>(layer[S]) != permanent_naive(minor)) {
                detail = "minor identity failed";
                return false;
            }
        }
    }
    detail = "14000 oracle comparisons, 200 minor-identity instances";
    return true;
}

bool lemma6_gate(std::string& detail) {
    auto outs = check_lemma6_random(100, 3, 12, 1007, jobs());
    int extended = 0;
    for (const auto& o : outs) {
        if (!o.passed) {
            detail = "chain search failed: " + o.params.dump();
            return false;
        }
        if (o.stats["chain_validated"] != true) {
            detail = "returned chain failed the covers check";
            return false;
        }
        std::string field = o.stats["field"].get<std::string>();
        if (field != "gf3" && field != "gf9" && field != "gf27") {
            detail = "chain over unexpected field " + field;
            return false;
        }
        if (field != "gf3") ++extended;
    }
    detail = "100 chains, " + std::to_string(extended) + " needed a field extension";
    return true;
}

std::string capture(const std::string& cmd, int& code) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) {
        code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

bool determinism_gate(const std::string& bin, std::string& detail) {
    static const std::regex elapsed("\"elapsed_ms\":[0-9]+");
    const std::string cmd = "\"" + bin + "\" verify main --n 3 --trials 100 --seed 7";
    int code1 = 0, code2 = 0;
    std::string a = std::regex_replace(capture(cmd, code1), elapsed, "\"elapsed_ms\":0");
    std::string b = std::regex_replace(capture(cmd, code2), elapsed, "\"elapsed_ms\":0");
    if (code1 != 0 || code2 != 0) {
        detail = "runs exited " + std::to_string(code1) + "/" + std::to_string(code2);
        return false;
    }
    if (a.empty() || a != b) {
        detail = "report streams differ";
        return false;
    }
    detail = "two runs, byte-identical streams apart from timing";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <cli-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    Gate gate;

    gate.criterion(1, "operator identities on 10000 random instances (m <= 8)", 10.0,
                   operator_suite);
    gate.criterion(2, "slice equalities exhaustive for m <= 5 with tightness witness", 60.0,
                   theorem5_gate);
    gate.criterion(3, "product-space equalities: exhaustive n=1, random n=2, span reduction",
                   120.0, theorem7_gate);
    gate.criterion(4, "stacked bands have full perrank (16 + 3000 trials, ms floors)", 120.0,
                   theorem3_gate);
    gate.criterion(5, "four nonsingular bases form additive bases, n = 2..10", 180.0,
                   corollary4_gate);
    gate.criterion(6, "permanent oracle equivalence and the minor identity", 120.0,
                   permanent_gate);
    gate.criterion(7, "nested chains over own ms profiles, 100 spaces", 120.0, lemma6_gate);
    gate.criterion(8, "byte-identical verification streams across reruns", 120.0,
                   [&](std::string& d) { return determinism_gate(bin, d); });

    if (gate.failed) {
        std::cout << gate.failed << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
