// Exit-code and output contract of the command-line tool, exercised by
// spawning the real binary. argv[1] = binary path, argv[2] = golden dir.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "ok - " << what << "\n";
    } else {
        ++failures;
        std::cout << "FAIL - " << what << "\n";
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    RunResult res;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    int rc = pclose(p);
    if (WIFEXITED(rc)) res.code = WEXITSTATUS(rc);
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string normalize_timing(const std::string& s) {
    static const std::regex elapsed("\"elapsed_ms\":[0-9]+");
    return std::regex_replace(s, elapsed, "\"elapsed_ms\":0");
}

std::vector<json> parse_lines(const std::string& s) {
    std::vector<json> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_contract <binary> <golden-dir>\n";
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";
    const std::string golden = argv[2];

    char tmpl[] = "/tmp/cli_contract_XXXXXX";
    const char* dirp = mkdtemp(tmpl);
    if (!dirp) {
        std::cerr << "cannot create scratch dir\n";
        return 2;
    }
    const std::string dir = dirp;

    write_file(dir + "/id3.txt", "field gf3\n3 3\n1 0 0\n0 1 0\n0 0 1\n");
    write_file(dir + "/split.txt", "field gf3\n2 6\n1 1 0 0 0 0\n0 0 1 1 1 1\n");
    write_file(dir + "/bad.txt", "field gf3\n2 2\n1 3\n0 1\n");
    write_file(dir + "/zeros1.txt", "field gf3\n1 4\n0 0 0 0\n");
    write_file(dir + "/ones1.txt", "field gf3\n1 4\n1 1 1 1\n");
    write_file(dir + "/narrow.txt", "field gf3\n2 1\n1\n0\n");

    // utility subcommands print plain values
    RunResult r = run_cmd(bin + " perrank --matrix " + dir + "/id3.txt");
    expect(r.code == 0 && r.out == "3\n", "perrank of the identity prints 3 and exits 0");
    r = run_cmd(bin + " permanent --matrix " + dir + "/id3.txt");
    expect(r.code == 0 && r.out == "1\n", "permanent of the identity prints 1");
    r = run_cmd(bin + " permanent --naive --matrix " + dir + "/id3.txt");
    expect(r.code == 0 && r.out == "1\n", "naive permanent agrees");
    r = run_cmd(bin + " ms --matrix " + dir + "/split.txt");
    expect(r.code == 0 && r.out == "2 6\n", "ms prints the full profile");
    r = run_cmd(bin + " ms --matrix " + dir + "/split.txt --i 2");
    expect(r.code == 0 && r.out == "6\n", "ms --i prints a single value");

    // input errors exit 2
    r = run_cmd(bin + " perrank --matrix " + dir + "/nofile.txt");
    expect(r.code == 2, "missing matrix file exits 2");
    r = run_cmd(bin + " perrank --matrix " + dir + "/bad.txt");
    expect(r.code == 2 && r.out.empty(), "out-of-range entry exits 2 with no stdout");
    r = run_cmd(bin + " nonsense");
    expect(r.code == 2, "unknown subcommand exits 2");
    r = run_cmd(bin);
    expect(r.code == 2, "missing subcommand exits 2");
    r = run_cmd(bin + " perrank");
    expect(r.code == 2, "missing required option exits 2");
    r = run_cmd(bin + " --help");
    expect(r.code == 0, "--help exits 0");
    r = run_cmd(bin + " verify lemma6");
    expect(r.code == 2, "lemma6 without inputs exits 2");
    r = run_cmd(bin + " verify thm7 --matrix " + dir + "/split.txt --k 0 --part C");
    expect(r.code == 2, "invalid part letter exits 2");
    r = run_cmd(bin + " express --file " + dir + "/ones1.txt --target \"1 2\"");
    expect(r.code == 2, "target length mismatch exits 2");

    // findings exit 1 with a serialized witness
    r = run_cmd(bin + " check-basis --file " + dir + "/zeros1.txt");
    {
        auto lines = parse_lines(r.out);
        bool shape = r.code == 1 && lines.size() == 1;
        expect(shape, "zero vectors fail check-basis with exit 1");
        if (shape) {
            const json& o = lines[0];
            expect(o["statement"] == "basis" && o["passed"] == false &&
                       o["counterexample"]["target"] == json::array({1}),
                   "the finding records unreachable target 1");
        }
    }
    r = run_cmd(bin + " check-basis --file " + dir + "/ones1.txt");
    {
        auto lines = parse_lines(r.out);
        expect(r.code == 0 && lines.size() == 1 && lines[0]["passed"] == true,
               "four ones over one dimension form a basis");
    }
    r = run_cmd(bin + " express --file " + dir + "/ones1.txt --target 2");
    expect(r.code == 0 && r.out == "1 1 0 0\n", "express emits the first-fit certificate");
    r = run_cmd(bin + " express --file " + dir + "/narrow.txt --target \"0 1\"");
    expect(r.code == 1 && r.out == "none\n", "unreachable target exits 1");

    // verify subcommands emit one report per line
    r = run_cmd(bin + " verify thm5 --m 3 --u \"1 1 1\" --k 1");
    {
        auto lines = parse_lines(r.out);
        bool shape = r.code == 0 && lines.size() == 2;
        expect(shape, "single-form verify emits two reports");
        if (shape)
            expect(lines[0]["statement"] == "thm5.1" && lines[1]["statement"] == "thm5.2" &&
                       lines[0]["passed"] == true && lines[1]["vacuous"] == true,
                   "reports carry statement ids and vacuity");
    }
    r = run_cmd(bin + " verify lemma6 --matrix " + dir + "/split.txt --seq \"2 6\"");
    {
        auto lines = parse_lines(r.out);
        expect(r.code == 0 && lines.size() == 1 && lines[0]["passed"] == true &&
                   lines[0]["stats"]["chain_validated"] == true,
               "lemma6 verifies the split pair");
    }
    r = run_cmd(bin + " verify main --n 2 --trials 100 --seed 7");
    {
        auto lines = parse_lines(r.out);
        bool all_pass = lines.size() == 100;
        for (const auto& o : lines)
            all_pass = all_pass && o["passed"] == true && o["statement"] == "thm3";
        expect(r.code == 0 && all_pass, "verify main emits 100 passing trial reports");
    }

    // --out redirects the report stream
    r = run_cmd(bin + " verify thm5 --m 2 --u \"1 1\" --k 0 --out " + dir + "/rep.jsonl");
    {
        auto lines = parse_lines(read_file(dir + "/rep.jsonl"));
        expect(r.code == 0 && r.out.empty() && lines.size() == 2,
               "--out writes the reports to a file");
    }

    // byte-stable streams against the recorded golden runs
    r = run_cmd(bin + " verify main --n 1");
    expect(normalize_timing(r.out) == read_file(golden + "/verify_main_n1.jsonl") && r.code == 0,
           "verify main --n 1 matches the golden stream");
    r = run_cmd(bin + " verify thm5 --m 3");
    expect(normalize_timing(r.out) == read_file(golden + "/thm5_m3.jsonl") && r.code == 0,
           "verify thm5 --m 3 matches the golden stream");

    std::cout << (failures ? "FAILED " : "passed ") << "cli contract checks\n";
    return failures ? 1 : 0;
}
