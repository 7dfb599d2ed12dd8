#pragma once

#include "polylist/setmodel/category.hpp"

#include <vector>

namespace polylist::setmodel {

/// Equalizer of two parallel arrows, realized as a Sub of their domain.
struct Equalizer {
  ObjExpr obj;
  Arrow inclusion;
  Arrow f;
  Arrow g;

  /// Factors h through the equalizer. Rejects h when f.h and g.h differ on
  /// an enumerated element (ConstraintError carrying the witness).
  Arrow mediate(const Arrow& h, const Budget& budget) const;
};

Equalizer equalizer_obj(const Arrow& f, const Arrow& g);

/// Pullback A x_C B of f : A -> C and g : B -> C, realized as
/// Sub(A*B, f.pi1, g.pi2).
struct Pullback {
  ObjExpr obj;
  Arrow p1;
  Arrow p2;
  Arrow f;
  Arrow g;

  /// <u, v> into the pullback, provided f.u = g.v on enumerated elements.
  Arrow mediate(const Arrow& u, const Arrow& v, const Budget& budget) const;
};

Pullback pullback_obj(const Arrow& f, const Arrow& g);

/// One summand of a case split: a Sub of the common domain and the branch
/// applied on it.
struct CasePart {
  ObjExpr part;  // a Sub of the merged domain
  Arrow branch;  // part -> Y
};

/// Merges branches defined on disjoint, covering Subs of `dom` into one
/// arrow dom -> Y. Every enumerated element must lie in exactly one part;
/// otherwise CoverageError lists the offending witnesses.
Arrow case_merge(const ObjExpr& dom, const std::vector<CasePart>& parts, const Budget& budget);

}  // namespace polylist::setmodel
