#include <string>

#include "doctest.h"
#include "permbasis/textio.hpp"

using namespace permbasis;

namespace {

ParseError capture(const std::string& text) {
    try {
        (void)parse_matrix(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("field lookup by name") {
    CHECK(field_by_name("gf3", 1, 1).order() == 3);
    CHECK(field_by_name("gf27", 1, 1).order() == 27);
    CHECK_THROWS_AS((void)field_by_name("gf4", 1, 7), ParseError);
    try {
        (void)field_by_name("gf4", 1, 7);
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() == 7);
    }
}

TEST_CASE("every field element round-trips through its token") {
    for (int q : {3, 5, 7, 9, 27}) {
        const Field& f = gf(q);
        for (int v = 0; v < q; ++v) CHECK(parse_scalar_token(f, f.str(v), 1, 1) == v);
    }
}

TEST_CASE("non-canonical scalar tokens are rejected") {
    const Field& f9 = gf(9);
    for (const char* bad : {"t+1", "1*t", "0+t", "2+0*t", "t^0", "t^2", "03", "+1", "1+", "x",
                            "1+1", "t+t", "-1", "3", "2*t^2"}) {
        CHECK_THROWS_AS((void)parse_scalar_token(f9, bad, 1, 1), ParseError);
    }
    const Field& f3 = gf(3);
    for (const char* bad : {"t", "3", "12", "01", ""}) {
        CHECK_THROWS_AS((void)parse_scalar_token(f3, bad, 1, 1), ParseError);
    }
    const Field& f27 = gf(27);
    CHECK(parse_scalar_token(f27, "2*t^2", 1, 1) == 18);
    CHECK(parse_scalar_token(f27, "1+2*t+t^2", 1, 1) == 16);
    CHECK_THROWS_AS((void)parse_scalar_token(f27, "t^3", 1, 1), ParseError);
    CHECK_THROWS_AS((void)parse_scalar_token(f27, "t^2+1", 1, 1), ParseError);
}

TEST_CASE("matrix text round trip") {
    std::string text = "field gf3\n2 2\n1 0\n0 1\n";
    MatrixF M = parse_matrix(text);
    CHECK(M == MatrixF::identity(gf(3), 2));
    CHECK(serialize_matrix(M) == text);

    std::string ext = "field gf9\n2 3\n1 t 2*t\n0 1+t 2+2*t\n";
    MatrixF E = parse_matrix(ext);
    CHECK(E.field().order() == 9);
    CHECK(E.at(0, 1) == 3);
    CHECK(E.at(1, 1) == 4);
    CHECK(E.at(1, 2) == 8);
    CHECK(serialize_matrix(E) == ext);

    // trailing blank lines are tolerated
    CHECK(parse_matrix("field gf3\n1 1\n2\n\n  \n") == parse_matrix("field gf3\n1 1\n2\n"));
}

TEST_CASE("out-of-range entries are flagged with their position") {
    ParseError e = capture("field gf3\n2 2\n1 3\n0 1\n");
    CHECK(e.line() == 3);
    CHECK(e.col() == 3);
    CHECK(std::string(e.what()).find("line 3, col 3") != std::string::npos);
}

TEST_CASE("malformed inputs carry precise positions") {
    CHECK(capture("").line() == 1);
    CHECK(capture("matrix gf3\n1 1\n1\n").line() == 1);
    CHECK(capture("field gf2\n1 1\n1\n").line() == 1);
    CHECK(capture("field gf3\n").line() == 2);
    CHECK(capture("field gf3\n2\n1 1\n").line() == 2);
    CHECK(capture("field gf3\n0 4\n").line() == 2);
    CHECK(capture("field gf3\n5000 1\n").line() == 2);
    CHECK(capture("field gf3\n2 2\n1 0\n").line() == 4);       // missing row
    CHECK(capture("field gf3\n1 3\n1 0\n").line() == 3);       // short row
    CHECK(capture("field gf3\n1 2\n1 0 1\n").line() == 3);     // long row
    CHECK(capture("field gf3\n1 1\n1\nstray\n").line() == 4);  // trailing junk
    ParseError e = capture("field gf3\n1 2\n1 t\n");
    CHECK(e.line() == 3);
    CHECK(e.col() == 3);
}

TEST_CASE("serialization uses canonical tokens for extensions") {
    MatrixF m(gf(27), 1, 3);
    m.set(0, 0, 0);
    m.set(0, 1, 16);
    m.set(0, 2, 26);
    CHECK(serialize_matrix(m) == "field gf27\n1 3\n0 1+2*t+t^2 2+2*t+2*t^2\n");
    MatrixF back = parse_matrix(serialize_matrix(m));
    CHECK(back == m);
}
