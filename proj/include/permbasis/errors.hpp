#ifndef PERMBASIS_ERRORS_HPP
#define PERMBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permbasis {

// Mixing scalars/elements/matrices from different fields.
class FieldMismatch : public std::invalid_argument {
public:
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Enumeration would exceed the configured work ceiling.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Text-format error carrying a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace permbasis

#endif
