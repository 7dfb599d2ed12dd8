#pragma once

#include "polylist/setmodel/object.hpp"

#include <string>
#include <vector>

namespace polylist::setmodel {

/// Output of a bounded enumeration.
struct Enumeration {
  std::vector<Elem> elems;
  /// True when card_cap cut the enumeration short (here or in a component).
  bool truncated = false;
};

/// Deterministic bounded enumeration of an object.
///
/// Order: N is numeric up to nat_max; L(X) is by length 0..len_max and then
/// lexicographic in the enumeration of X; products are lexicographic with the
/// first component most significant; a Sub is the filtered enumeration of its
/// base. The output never exceeds card_cap elements.
Enumeration enumerate(const ObjExpr& obj, const Budget& budget);

/// Structural membership test. For a Sub the defining arrows are evaluated
/// and compared, so the check is exact; the budget is not consulted because
/// naturals and lists carry no size bound.
bool elem_has_type(const Elem& e, const ObjExpr& obj);

/// Renders an element using the names of finite objects, e.g. `[a,b]` for a
/// list over {a,b}. Falls back to Elem::to_string for ill-typed input.
std::string render(const Elem& e, const ObjExpr& obj);

}  // namespace polylist::setmodel
