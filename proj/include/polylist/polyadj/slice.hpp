#pragma once

#include "polylist/setmodel/enumerate.hpp"
#include "polylist/setmodel/limits.hpp"
#include "polylist/setmodel/report.hpp"

#include <cstdint>
#include <vector>

namespace polylist::polyadj {

using setmodel::Arrow;
using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

/// An object of a slice category: carrier together with its map to the base.
struct SliceObj {
  ObjExpr carrier;
  Arrow proj;  // carrier -> base
  ObjExpr base;

  SliceObj(ObjExpr carrier, Arrow proj);
};

/// X over the terminal object.
SliceObj over_terminal(const ObjExpr& X);

/// Composition with f : base -> B.
SliceObj sigma_f(const Arrow& f, const SliceObj& p);

/// Pullback of q (over B) along f : A -> B; the result lives over A and
/// its carrier is A x_B Q with elements (a, q).
SliceObj delta_f(const Arrow& f, const SliceObj& q);

/// Dependent product of p (over A) along f : A -> B.
///
/// An element over b is a section of p on the fiber of f over b, stored as
/// (b, [s(a_1), ..., s(a_k)]) with a_1, ..., a_k the fiber in enumeration
/// order. Fibers are read off the budget enumeration of A and of p's
/// carrier; `sections` lists every element over the enumerated base.
struct PiSlice {
  SliceObj slice;
  std::vector<Elem> sections;
  std::vector<std::uint64_t> fiber_counts;  // sections per enumerated base element
};

/// BudgetError when a carrier enumeration is truncated or the section count
/// would pass card_cap.
PiSlice pi_f(const Arrow& f, const SliceObj& p, const Budget& budget);

/// s : A -> I, f : A -> B, t : B -> J.
struct PolyDiagram {
  Arrow s;
  Arrow f;
  Arrow t;

  PolyDiagram(Arrow s, Arrow f, Arrow t);
};

/// The polynomial 1 <- E -> N -> 1 whose middle map is the second
/// projection of E.
PolyDiagram list_polynomial();

/// Sigma_t . Pi_f . Delta_s applied to X (over the terminal object),
/// computed concretely.
struct PolyExtension {
  SliceObj result;
  std::vector<Elem> carrier;
  std::vector<Elem> bases;                  // enumerated elements of B
  std::vector<std::uint64_t> fiber_counts;  // carrier elements over each base
};

PolyExtension poly_extension(const PolyDiagram& P, const SliceObj& X, const Budget& budget);

/// Element of the list polynomial's extension as a list, and back.
Elem section_to_list(const Elem& e);
Elem list_to_section(const Elem& list);

/// For the list polynomial: the two maps above are mutually inverse between
/// the computed carrier and the lists of length <= budget.nat_max, and the
/// cardinalities agree.
setmodel::LawResult check_list_bijection(const PolyExtension& ext, const ObjExpr& X, const Budget& budget);

}  // namespace polylist::polyadj
