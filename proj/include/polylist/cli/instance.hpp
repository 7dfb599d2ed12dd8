#pragma once

#include "polylist/polyadj/adjoint.hpp"

#include <string>
#include <string_view>

namespace polylist::cli {

/// An adjunction instance read from text, with element names kept for
/// reporting.
struct InstanceFile {
  polyadj::Instance instance;
  std::vector<std::string> x_names;
  std::vector<std::string> a_names;
};

/// Grammar, one statement per line, `#` to end of line is a comment:
///   X = {a, b}
///   A = {p, q, r}
///   lA: p -> 2, q -> 0, r -> 1
///   g: (0, p) -> a, (1, p) -> b, (0, r) -> a
/// SyntaxError with line and column for malformed text, unknown names,
/// duplicate entries, entries outside m < lA(a) and missing entries.
InstanceFile parse_instance(std::string_view text);

}  // namespace polylist::cli
