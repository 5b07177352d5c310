#ifndef SIGMA_PARSER_HPP
#define SIGMA_PARSER_HPP

#include <string>

#include "sigma/ratfunc.hpp"

namespace sigma {

class parse_error : public poly_error {
public:
    parse_error(const std::string& what, std::size_t offset, std::string expected)
        : poly_error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Parses an expression over x1..xn (aliases x, y, z when n <= 3) with
// integer literals and + - * / ^ and parentheses. Precedence
// ^ > unary - > * / > + -, left-associative infix, ^ right-associative
// with a non-negative integer literal exponent. The result is fully
// normalized. Throws parse_error with a byte offset on bad syntax and
// poly_error on division by the zero function.
RationalFunction parse_expr(const std::string& text, int nvars);

// Canonical textual form; parse_expr(format_expr(f), f.nvars()) == f.
std::string format_expr(const RationalFunction& f);
std::string format_poly(const Poly& p);

}  // namespace sigma

#endif
