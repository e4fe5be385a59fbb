#include "permbasis/textio.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace permbasis {

namespace {

struct Tok {
    std::string text;
    int col;  // 1-based start column
};

std::vector<Tok> split_tokens(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

long parse_uint(const std::string& s) {
    if (s.empty() || s.size() > 9) return -1;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return -1;
    return std::stol(s);
}

}  // namespace

const Field& field_by_name(const std::string& name, int line, int col) {
    for (int q : {3, 5, 7, 9, 27})
        if (name == "gf" + std::to_string(q)) return gf(q);
    throw ParseError(line, col, "unknown field '" + name + "'");
}

int parse_scalar_token(const Field& f, const std::string& tok, int line, int col) {
    if (tok.empty()) throw ParseError(line, col, "empty entry");
    int p = f.characteristic();
    int deg = f.degree();
    // structural parse: '+'-separated parts, each INT | [INT*]t | [INT*]t^2
    int value = 0;
    size_t pos = 0;
    bool first = true;
    while (pos < tok.size()) {
        if (!first) {
            if (tok[pos] != '+') throw ParseError(line, col + static_cast<int>(pos), "expected '+'");
            ++pos;
        }
        first = false;
        size_t start = pos;
        while (pos < tok.size() && tok[pos] != '+') ++pos;
        std::string part = tok.substr(start, pos - start);
        if (part.empty()) throw ParseError(line, col + static_cast<int>(start), "empty term");

        int coeff = -1;
        int power = 0;
        size_t q = 0;
        while (q < part.size() && std::isdigit(static_cast<unsigned char>(part[q]))) ++q;
        if (q > 0) {
            if (q > 3) throw ParseError(line, col + static_cast<int>(start), "entry out of range");
            coeff = std::stoi(part.substr(0, q));
            if (q < part.size()) {
                if (part[q] != '*')
                    throw ParseError(line, col + static_cast<int>(start), "malformed entry");
                ++q;
            }
        }
        if (q < part.size()) {
            if (part[q] != 't') throw ParseError(line, col + static_cast<int>(start), "malformed entry");
            ++q;
            power = 1;
            if (q < part.size()) {
                if (part.substr(q) != "^2")
                    throw ParseError(line, col + static_cast<int>(start), "malformed entry");
                q = part.size();
                power = 2;
            }
            if (coeff == -1) coeff = 1;
        } else if (coeff == -1) {
            throw ParseError(line, col + static_cast<int>(start), "malformed entry");
        }
        if (power >= deg)
            throw ParseError(line, col + static_cast<int>(start),
                             "power t^" + std::to_string(power) + " exceeds the field degree");
        if (coeff >= p)
            throw ParseError(line, col + static_cast<int>(start),
                             "entry out of range for " + f.name());
        int pw = 1;
        for (int i = 0; i < power; ++i) pw *= p;
        value += coeff * pw;
    }
    if (value >= f.order() || f.str(value) != tok)
        throw ParseError(line, col, "entry '" + tok + "' is not canonical for " + f.name());
    return value;
}

MatrixF parse_matrix(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");

    auto header = split_tokens(lines[0]);
    if (header.size() != 2 || header[0].text != "field")
        throw ParseError(1, header.empty() ? 1 : header[0].col, "expected 'field <name>'");
    const Field& F = field_by_name(header[1].text, 1, header[1].col);

    if (lines.size() < 2) throw ParseError(2, 1, "missing dimensions line");
    auto dims = split_tokens(lines[1]);
    if (dims.size() != 2) throw ParseError(2, 1, "expected '<rows> <cols>'");
    long rows = parse_uint(dims[0].text);
    long cols = parse_uint(dims[1].text);
    if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096)
        throw ParseError(2, dims[0].col, "dimensions out of range");

    MatrixF M(F, static_cast<int>(rows), static_cast<int>(cols));
    for (long i = 0; i < rows; ++i) {
        int lineno = static_cast<int>(i) + 3;
        if (static_cast<size_t>(i + 2) >= lines.size())
            throw ParseError(lineno, 1, "missing matrix row");
        auto toks = split_tokens(lines[i + 2]);
        if (static_cast<long>(toks.size()) != cols)
            throw ParseError(lineno, toks.empty() ? 1 : toks.back().col,
                             "expected " + std::to_string(cols) + " entries, found " +
                                 std::to_string(toks.size()));
        for (long j = 0; j < cols; ++j)
            M.set(static_cast<int>(i), static_cast<int>(j),
                  parse_scalar_token(F, toks[j].text, lineno, toks[j].col));
    }
    for (size_t extra = static_cast<size_t>(rows) + 2; extra < lines.size(); ++extra)
        if (!split_tokens(lines[extra]).empty())
            throw ParseError(static_cast<int>(extra) + 1, 1, "unexpected content after matrix");
    return M;
}

std::string serialize_matrix(const MatrixF& m) {
    std::ostringstream out;
    out << "field " << m.field().name() << "\n" << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m.field().str(m.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace permbasis
