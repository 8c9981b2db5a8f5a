#pragma once

#include <stdexcept>
#include <string>

#include "curvebound/sparsepoly.hpp"

namespace curvebound {

enum class ParseErrorKind {
    Syntax,
    ZeroPolynomial,
    NegativeExponent,
    NonIntegerExponent,
    DegreeLimit,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, size_t position, const std::string& message)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          kind_(kind),
          position_(position) {}

    ParseErrorKind kind() const { return kind_; }
    size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    size_t position_;
};

// Parses an expression in the variables x and y with +, -, *, ^,
// parentheses and integer/decimal/fraction literals into the fully
// expanded polynomial. Whitespace is ignored. The zero polynomial is
// rejected. Every failure is a ParseError carrying a byte offset.
//
// Grammar:
//   expression := sign? term (('+'|'-') sign? term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' uint)?
//   base       := literal | 'x' | 'y' | '(' expression ')'
//   literal    := number ('/' number)?         number := digits ('.' digits)?
SparsePoly parse_polynomial(const std::string& source);

// Reads one expression from a corpus file: '#' starts a comment running to
// the end of the line; remaining lines are joined and parsed.
SparsePoly parse_polynomial_file(const std::string& path);

}  // namespace curvebound
