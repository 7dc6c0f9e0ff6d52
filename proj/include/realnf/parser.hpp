#pragma once

#include <string>

#include "realnf/bipoly.hpp"

namespace realnf {

class ParseError : public std::runtime_error {
  public:
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar: rational literals (n, n/m), variables x and y, operators + - * ^
// with the usual precedence, parentheses, unary minus.  No implicit
// multiplication; exponents are non-negative integers.
BiPoly<Rat> parse_polynomial(const std::string& text);

}  // namespace realnf
