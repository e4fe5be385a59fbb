#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permbasis/additive.hpp"
#include "permbasis/formspace.hpp"
#include "permbasis/perrank.hpp"
#include "permbasis/textio.hpp"
#include "permbasis/verify.hpp"

namespace pb = permbasis;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// Emit one JSON object per report line; human summary to stderr.
// Returns 1 if any report records a failure, else 0.
int emit_reports(const std::vector<pb::CheckOutcome>& outs, const std::string& out_path,
                 const std::string& label) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
        os = &file;
    }
    long passed = 0, failed = 0, vacuous = 0;
    for (const auto& o : outs) {
        *os << pb::outcome_json(o).dump() << "\n";
        if (o.vacuous) ++vacuous;
        else if (o.passed) ++passed;
        else ++failed;
    }
    os->flush();
    std::cerr << label << ": " << passed << " passed, " << failed << " failed, " << vacuous
              << " vacuous (" << outs.size() << " reports)\n";
    return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit: squarefree-algebra operators, permanental rank, "
                 "minimum support functions, and additive-basis certification"};
    app.require_subcommand(1);

    std::string matrix_path, file_path, out_path, u_str, seq_str, target_str, min_ms_str, part_str = "A";
    uint64_t seed = 0;
    int jobs = 1;

    auto* cmd_perm = app.add_subcommand("permanent", "Permanent of a square matrix");
    cmd_perm->add_option("--matrix", matrix_path, "matrix file")->required();
    bool use_naive = false;
    cmd_perm->add_flag("--naive", use_naive, "use the permutation-sum oracle (size <= 10)");

    auto* cmd_perrank = app.add_subcommand("perrank", "Largest size of a square submatrix with nonzero permanent");
    cmd_perrank->add_option("--matrix", matrix_path, "matrix file")->required();

    auto* cmd_ms = app.add_subcommand("ms", "Minimum support function of the row space");
    cmd_ms->add_option("--matrix", matrix_path, "matrix file (rows = basis forms)")->required();
    int ms_i = 0;
    long long ms_budget = pb::MS_DEFAULT_BUDGET;
    cmd_ms->add_option("--i", ms_i, "subspace dimension (omit for the full profile)");
    cmd_ms->add_option("--budget", ms_budget, "subspace enumeration ceiling");

    auto* cmd_basis = app.add_subcommand("check-basis", "Is the column multiset an additive basis of Z_p^n?");
    cmd_basis->add_option("--file", file_path, "matrix file; columns are the vectors")->required();
    cmd_basis->add_option("--out", out_path, "report file (default stdout)");

    auto* cmd_express = app.add_subcommand("express", "0/1-combination certificate for a target vector");
    cmd_express->add_option("--file", file_path, "matrix file; columns are the vectors")->required();
    cmd_express->add_option("--target", target_str, "target coordinates, e.g. \"1 2 0\"")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Statement checkers; one JSON report per line");
    cmd_verify->require_subcommand(1);

    auto* v_thm5 = cmd_verify->add_subcommand(
        "thm5", "Annihilator/ideal slice equalities for a linear form over GF(3)");
    int thm5_m = 0, thm5_k = 0, thm5_kmax = -1;
    v_thm5->add_option("--m", thm5_m, "number of variables")->required();
    v_thm5->add_option("--u", u_str, "single form coefficients, e.g. \"1 1 1\"");
    v_thm5->add_option("--k", thm5_k, "degree for the single-form check");
    v_thm5->add_option("--kmax", thm5_kmax, "degree ceiling for the exhaustive sweep (default m/2)");
    v_thm5->add_option("--out", out_path, "report file");

    auto* v_lemma6 = cmd_verify->add_subcommand("lemma6", "Nested chain covering a sequence suffix by suffix");
    int l6_random = 0, l6_dim = 3, l6_m = 12;
    v_lemma6->add_option("--matrix", matrix_path, "space basis file (rows = forms)");
    v_lemma6->add_option("--seq", seq_str, "strictly increasing sequence, e.g. \"2 6\"");
    v_lemma6->add_option("--random", l6_random, "number of random spaces (checked against their own ms profiles)");
    v_lemma6->add_option("--dim", l6_dim, "max dimension for random spaces");
    v_lemma6->add_option("--m", l6_m, "max variables for random spaces");
    v_lemma6->add_option("--seed", seed, "master seed");
    v_lemma6->add_option("--jobs", jobs, "worker threads");
    v_lemma6->add_option("--out", out_path, "report file");

    auto* v_thm7 = cmd_verify->add_subcommand("thm7", "Annihilator/ideal equalities for products of squared forms");
    int t7_k = 0, t7_random = 0, t7_n = 2, t7_m_min = 6, t7_m_max = 10;
    int t7_reduction = 0, t7_max_n = 2, t7_max_m = 8, t7_samples = 200, t7_exhaustive_m = 0;
    v_thm7->add_option("--matrix", matrix_path, "space basis file");
    v_thm7->add_option("--k", t7_k, "degree offset");
    v_thm7->add_option("--part", part_str, "A or B")->check(CLI::IsMember({"A", "B"}));
    v_thm7->add_option("--exhaustive-n1", t7_exhaustive_m, "exhaustive 1-dim sweep up to this many variables");
    v_thm7->add_option("--random", t7_random, "number of random spaces");
    v_thm7->add_option("--n", t7_n, "dimension for random spaces");
    v_thm7->add_option("--m-min", t7_m_min, "min variables for random spaces");
    v_thm7->add_option("--m-max", t7_m_max, "max variables for random spaces");
    v_thm7->add_option("--min-ms", min_ms_str, "ms floor for random spaces, e.g. \"2 6\"");
    v_thm7->add_option("--reduction", t7_reduction, "number of span-reduction instances");
    v_thm7->add_option("--max-n", t7_max_n, "max dimension for span-reduction instances");
    v_thm7->add_option("--max-m", t7_max_m, "max variables for span-reduction instances");
    v_thm7->add_option("--samples", t7_samples, "products sampled per span-reduction instance");
    v_thm7->add_option("--seed", seed, "master seed");
    v_thm7->add_option("--jobs", jobs, "worker threads");
    v_thm7->add_option("--out", out_path, "report file");

    auto* v_main = cmd_verify->add_subcommand("main", "Stacked nonsingular blocks have full perrank");
    int main_n = 1, main_trials = 100;
    v_main->add_option("--n", main_n, "block size")->required();
    v_main->add_option("--trials", main_trials, "seeded trials (ignored at n = 1, which is exhaustive)");
    v_main->add_option("--seed", seed, "master seed");
    v_main->add_option("--jobs", jobs, "worker threads");
    v_main->add_option("--out", out_path, "report file");

    auto* v_cor4 = cmd_verify->add_subcommand("cor4", "Four nonsingular bases as an additive basis of Z_3^n");
    int c4_n = 2, c4_trials = 100, c4_targets = 20;
    v_cor4->add_option("--n", c4_n, "dimension")->required();
    v_cor4->add_option("--trials", c4_trials, "seeded trials");
    v_cor4->add_option("--targets", c4_targets, "verified certificates per trial");
    v_cor4->add_option("--seed", seed, "master seed");
    v_cor4->add_option("--jobs", jobs, "worker threads");
    v_cor4->add_option("--out", out_path, "report file");

    auto* v_conj2 = cmd_verify->add_subcommand("conj2", "p-block stack with p-1 repeats (evidence explorer)");
    int cj_p = 3, cj_n = 1, cj_trials = 100;
    v_conj2->add_option("--p", cj_p, "characteristic, 3 or 5")->required();
    v_conj2->add_option("--n", cj_n, "block size")->required();
    v_conj2->add_option("--trials", cj_trials, "seeded trials (ignored at n = 1, which is exhaustive)");
    v_conj2->add_option("--seed", seed, "master seed");
    v_conj2->add_option("--jobs", jobs, "worker threads");
    v_conj2->add_option("--out", out_path, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_perm) {
            pb::MatrixF M = pb::parse_matrix(read_file(matrix_path));
            int v = use_naive ? pb::permanent_naive(M) : pb::permanent(M);
            std::cout << M.field().str(v) << "\n";
            return 0;
        }
        if (*cmd_perrank) {
            pb::MatrixF M = pb::parse_matrix(read_file(matrix_path));
            std::cout << pb::perrank(M) << "\n";
            return 0;
        }
        if (*cmd_ms) {
            pb::LinearFormSpace U(pb::parse_matrix(read_file(matrix_path)));
            if (ms_i > 0) {
                std::cout << pb::ms(U, ms_i, ms_budget) << "\n";
            } else {
                auto profile = pb::ms_profile(U, ms_budget);
                for (size_t i = 0; i < profile.size(); ++i)
                    std::cout << (i ? " " : "") << profile[i];
                std::cout << "\n";
            }
            return 0;
        }
        if (*cmd_basis) {
            std::string text = read_file(file_path);
            pb::MatrixF M = pb::parse_matrix(text);
            if (M.field().degree() != 1)
                throw std::invalid_argument("additive bases live over prime fields");
            int p = M.field().characteristic();
            int n = M.rows();
            auto vs = pb::columns_of({M});
            pb::ReachSet reach(p, n);
            for (const auto& v : vs) reach.fold(v);
            pb::CheckOutcome o;
            o.statement = "basis";
            o.params = {{"p", p}, {"n", n}, {"count", vs.size()}, {"vectors", text}};
            o.passed = reach.all_reached();
            o.stats = {{"reached", reach.count()}, {"cells", reach.cells()}};
            if (!o.passed)
                o.counterexample = {{"target", pb::index_vec(*reach.first_unreached(), p, n)}};
            return emit_reports({o}, out_path, "basis");
        }
        if (*cmd_express) {
            pb::MatrixF M = pb::parse_matrix(read_file(file_path));
            if (M.field().degree() != 1)
                throw std::invalid_argument("additive bases live over prime fields");
            int p = M.field().characteristic();
            auto target = parse_int_list(target_str);
            if (static_cast<int>(target.size()) != M.rows())
                throw std::invalid_argument("target length differs from the vector dimension");
            for (int c : target)
                if (c < 0 || c >= p) throw std::invalid_argument("target coordinate out of range");
            auto coeffs = pb::express(pb::columns_of({M}), p, target);
            if (!coeffs) {
                std::cout << "none\n";
                std::cerr << "target unreachable\n";
                return 1;
            }
            for (size_t i = 0; i < coeffs->size(); ++i)
                std::cout << (i ? " " : "") << static_cast<int>((*coeffs)[i]);
            std::cout << "\n";
            return 0;
        }
        if (*v_thm5) {
            std::vector<pb::CheckOutcome> outs;
            if (!u_str.empty()) {
                outs = pb::check_theorem5(thm5_m, thm5_k, parse_int_list(u_str));
            } else {
                int kmax = thm5_kmax >= 0 ? thm5_kmax : thm5_m / 2;
                outs = pb::check_theorem5_exhaustive(thm5_m, kmax);
            }
            return emit_reports(outs, out_path, "thm5");
        }
        if (*v_lemma6) {
            std::vector<pb::CheckOutcome> outs;
            if (l6_random > 0) {
                outs = pb::check_lemma6_random(l6_random, l6_dim, l6_m, seed, jobs);
            } else {
                if (matrix_path.empty() || seq_str.empty())
                    throw std::invalid_argument("need --matrix and --seq, or --random");
                pb::LinearFormSpace U(pb::parse_matrix(read_file(matrix_path)));
                outs = {pb::check_lemma6(U, parse_int_list(seq_str))};
            }
            return emit_reports(outs, out_path, "lemma6");
        }
        if (*v_thm7) {
            std::vector<pb::CheckOutcome> outs;
            char part = part_str[0];
            if (t7_reduction > 0) {
                outs = pb::check_u2n_reduction(t7_reduction, t7_max_n, t7_max_m, t7_samples,
                                               seed, jobs);
            } else if (t7_exhaustive_m > 0) {
                outs = {pb::check_theorem7_exhaustive_n1(t7_exhaustive_m, t7_k, part)};
            } else if (t7_random > 0) {
                std::vector<int> floor_ms =
                    min_ms_str.empty() ? std::vector<int>{} : parse_int_list(min_ms_str);
                outs = pb::check_theorem7_random(t7_random, t7_n, t7_m_min, t7_m_max, t7_k, part,
                                                 floor_ms, seed, jobs);
            } else {
                if (matrix_path.empty())
                    throw std::invalid_argument(
                        "need --matrix, --random, --reduction, or --exhaustive-n1");
                pb::LinearFormSpace U(pb::parse_matrix(read_file(matrix_path)));
                outs = {pb::check_theorem7(U, t7_k, part)};
            }
            return emit_reports(outs, out_path, "thm7");
        }
        if (*v_main) {
            auto outs = pb::check_main_theorem(main_n, main_trials, seed, jobs);
            return emit_reports(outs, out_path, "main");
        }
        if (*v_cor4) {
            auto outs = pb::check_corollary4(c4_n, c4_trials, c4_targets, seed, jobs);
            return emit_reports(outs, out_path, "cor4");
        }
        if (*v_conj2) {
            auto outs = pb::conjecture2_check(cj_p, cj_n, cj_trials, seed, jobs);
            return emit_reports(outs, out_path, "conj2");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
