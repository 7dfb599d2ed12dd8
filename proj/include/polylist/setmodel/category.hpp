#pragma once

#include "polylist/setmodel/enumerate.hpp"
#include "polylist/setmodel/object.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polylist::setmodel {

Arrow identity(const ObjExpr& obj);

/// g after f. Requires f.cod == g.dom exactly; use `restrict` or
/// `Equalizer::mediate` to move across Sub inclusions.
Arrow compose(const Arrow& g, const Arrow& f);

/// Composes a chain right-to-left: compose_all({h, g, f}) = h . g . f.
Arrow compose_all(const std::vector<Arrow>& chain);

Arrow terminal_map(const ObjExpr& obj);

/// <f1, ..., fn>. All arrows share a domain; the codomain is the canonical
/// product of their codomains (so a single arrow is returned unchanged).
Arrow pairing(const std::vector<Arrow>& fs);

/// i-th projection (0-based) out of a product, or out of a Sub of a product.
Arrow proj(const ObjExpr& prod, std::size_t i);

/// f1 x ... x fn.
Arrow par(const std::vector<Arrow>& fs);

/// Constant arrow dom -> cod with value `value` (checked to lie in cod).
Arrow constant(const ObjExpr& dom, const ObjExpr& cod, const Elem& value);

/// Global element 1 -> cod.
Arrow global(const ObjExpr& cod, const Elem& value);

/// Precomposition with the inclusion sub -> f.dom. Representation-identity.
Arrow restrict(const Arrow& f, const ObjExpr& sub);

/// Inclusion of a Sub (or nested Sub) into `into`.
Arrow inclusion(const ObjExpr& sub, const ObjExpr& into);

/// Builds an arrow from an explicit finite table keyed by domain elements.
/// Inputs outside the table raise StructuralError.
Arrow from_table(const ObjExpr& dom, const ObjExpr& cod, std::vector<std::pair<Elem, Elem>> table,
                 std::string label = {});

/// Same arrow with results cached per input. Safe under concurrent calls.
Arrow memoize(const Arrow& f);

/// Result of bounded extensional comparison.
struct Equality {
  bool equal = true;
  std::optional<Elem> counterexample;  // least in enumeration order
  std::size_t checked = 0;
  bool truncated = false;

  explicit operator bool() const noexcept { return equal; }
};

/// f(e) == g(e) for every enumerated e of the common domain.
Equality arrows_equal(const Arrow& f, const Arrow& g, const Budget& budget);

}  // namespace polylist::setmodel
