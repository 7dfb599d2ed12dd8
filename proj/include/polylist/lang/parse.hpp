#pragma once

#include "polylist/lang/term.hpp"

#include <string_view>

namespace polylist::lang {

/// term := ident | numeral | "(" term ("," term)+ ")" | ident "(" [terms] ")"
///       | "[" [terms] "]" | term "::" term
/// Numerals become s(...s(0)...), list literals cons chains ending in nil.
/// SyntaxError carries a 1-based line and column.
Term parse_term(std::string_view text);

/// context := binding ("," binding)* ["|" equation ("," equation)*]
/// equation := term "=" term | term "<" term | term "<=" term
/// (m < n stands for monus(s(m), n) = 0, m <= n for monus(m, n) = 0)
/// binding := ident ":" type ; type := "1" | "N" | "L" "(" type ")" | type "*" type
///          | "(" type ")" | set name from the scope
Context parse_context(std::string_view text, const Scope& scope = {});

ObjExpr parse_type(std::string_view text, const Scope& scope = {});

/// "{a, b, c}" as a finite object.
ObjExpr parse_set(std::string_view text);

}  // namespace polylist::lang
