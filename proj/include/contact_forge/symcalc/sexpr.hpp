#pragma once

// Text format for expressions.
//
//   expr := INTEGER | INTEGER "/" INTEGER
//         | SYMBOL                          ; linear symbol
//         | "(" "+" expr+ ")"
//         | "(" "*" expr+ ")"
//         | "(" "-" expr ")"  | "(" "-" expr expr ")"
//         | "(" "^" expr INTEGER ")"
//         | "(" "sin" SYMBOL ")" | "(" "cos" SYMBOL ")"
//         | "(" "exp" expr ")"
//         | "(" "fn" SYMBOL INTEGER SYMBOL ")"   ; name, derivative order, argument
//
// `to_sexpr` prints the canonical tree, so equal expressions print
// identically; the output always parses back to an equivalent expression.

#include "contact_forge/symcalc/expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace contact_forge::sym {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_sexpr(const Expr& e);
Expr parse_sexpr(std::string_view text);

}  // namespace contact_forge::sym
