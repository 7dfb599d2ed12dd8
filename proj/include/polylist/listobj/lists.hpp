#pragma once

#include "polylist/arith/ops.hpp"

#include <string>
#include <utility>

namespace polylist::listobj {

using setmodel::Arrow;
using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

/// The list object L(X) with its two constructors.
struct ListKit {
  ObjExpr X;
  ObjExpr LX;
  Arrow nil;   // 1 -> LX
  Arrow cons;  // X*LX -> LX
};

ListKit list_kit(const ObjExpr& X);

/// Parametrized list recursion.
///
/// Given g : A -> B and h : A*X*LX*B -> B, returns f : A*LX -> B with
/// f(a, []) = g(a) and f(a, x::l) = h(a, x, l, f(a, l)). X is read off the
/// second component of h's domain. Evaluation folds from the right.
Arrow list_rec(const Arrow& g, const Arrow& h, std::string label = {});

/// Checks both defining equations of list_rec for f on all enumerated inputs.
setmodel::LawResult check_list_rec_equations(std::string id, const Arrow& g, const Arrow& h, const Arrow& f,
                                             const Budget& budget);

/// Number of arrows A*LX -> B, with LX cut at budget.len_max, satisfying
/// both defining equations. Same limits as arith::count_nno_rec_solutions.
std::uint64_t count_list_rec_solutions(const Arrow& g, const Arrow& h, const Budget& budget);

/// L(f) : LX -> LY.
Arrow map_list(const Arrow& f);

/// Every list arrow over one X, each built from the recursors.
///
///   len    : LX -> N             len(x::l) = s(len l)
///   tr     : LX -> LX            tr(x::l) = l, tr([]) = []
///   tail   : N*LX -> LX          tail(sn, l) = tr(tail(n, l))
///   zeroth_def : X*LX -> X       first entry, or the default on []
///   nth_def    : X*N*LX -> X     zeroth_def(x, tail(n, l))
///   concat : LX*LX -> LX
///   singleton : X -> LX
///   build_H : X*N*LX -> LX       tail(len l - k, l)
///   build_A : X*N*LX*LX -> LX    L if len l <= k, else nth_def(x, P(len l - k), l) :: L
struct ListOps {
  ListKit kit;
  Arrow len;
  Arrow tr;
  Arrow tail;
  Arrow zeroth_def;
  Arrow nth_def;
  Arrow concat;
  Arrow singleton;
  Arrow build_H;
  Arrow build_A;
};

ListOps list_ops(const ObjExpr& X);

/// Same X, but nth_def, build_H and build_A are rebuilt on the supplied
/// tail. Used to inject mutants into the law suite.
ListOps list_ops_with_tail(const ObjExpr& X, const Arrow& tail);

/// Head and rest of a non-empty list. ConstraintError on [].
std::pair<Elem, Elem> decompose_nonempty(const Elem& list);

/// Seq[f] : N*N*A -> LX for f : N*A -> X.
///   Seq[f](m, 0, a) = []     Seq[f](m, sn, a) = Seq[f](m, n, a) ++ [f(m+n, a)]
Arrow seq_build(const Arrow& f);

/// List[f, p] : A -> LX, a |-> Seq[f](0, p(a), a).
Arrow list_build(const Arrow& f, const Arrow& p);

/// [f(m), ..., f(m+n-1)] computed directly; an independent check on seq_build.
Elem seq_direct(const Arrow& f, const Elem& m, const Elem& n, const Elem& a);

}  // namespace polylist::listobj
