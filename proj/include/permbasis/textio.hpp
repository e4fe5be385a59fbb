#ifndef PERMBASIS_TEXTIO_HPP
#define PERMBASIS_TEXTIO_HPP

#include <string>

#include "permbasis/linalg.hpp"

namespace permbasis {

// Matrix text format:
//   field gf3
//   2 2
//   1 0
//   0 1
// Entries are canonical scalar tokens: bare digits for prime fields,
// ascending-power polynomials in t for extensions ("2", "t", "2*t",
// "1+2*t+t^2"; zero terms omitted, unit coefficients on t-powers
// omitted). Non-canonical tokens are rejected.
MatrixF parse_matrix(const std::string& text);
std::string serialize_matrix(const MatrixF& m);

// Strict canonical token; throws ParseError at (line, col) on violation.
int parse_scalar_token(const Field& f, const std::string& tok, int line, int col);

const Field& field_by_name(const std::string& name, int line, int col);

}  // namespace permbasis

#endif
