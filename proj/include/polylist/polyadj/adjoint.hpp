#pragma once

#include "polylist/listobj/lists.hpp"
#include "polylist/setmodel/report.hpp"

#include <cstdint>
#include <vector>

namespace polylist::polyadj {

using setmodel::Arrow;
using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

/// E = {m, n : N | m < n} with its second projection.
struct EObject {
  ObjExpr E;
  Arrow pi2E;  // E -> N
};

const EObject& make_E();

/// E x_N A for l : A -> N, with the isomorphism to {m : N, a : A | m < l(a)}.
struct ETimes {
  setmodel::Pullback pullback;   // elements ((m, n), a)
  setmodel::Equalizer below;     // elements (m, a)
  Arrow iso_to;                  // ((m, n), a) |-> (m, a)
  Arrow iso_from;                // (m, a) |-> ((m, l(a)), a)
};

ETimes e_times(const Arrow& l);

/// Id_E x_N f : E x_N A -> E x_N B, ((m, n), a) |-> ((m, n), f(a)).
/// Requires l_B . f = l_A on enumerated elements (ConstraintError otherwise).
Arrow id_times_f(const Arrow& f, const Arrow& l_A, const Arrow& l_B, const Budget& budget);

/// {m : N, l : L(X) | m < len l} -> X picking the head of l.
Arrow default_term(const ObjExpr& X);

/// nth : E x_N L(X) -> X, ((m, n), l) |-> nthDef(def(m, l), m, l).
Arrow nth_arrow(const ObjExpr& X);

/// A finite verification problem: l : A -> N and g defined exactly on
/// {(m, a) | m < l(a)}. Elements of X and A are indices into their names.
struct Instance {
  ObjExpr X;  // finite
  ObjExpr A;  // finite
  std::vector<std::uint64_t> lengths;           // l(a), per a
  std::vector<std::vector<std::uint64_t>> g;    // g[a][m] for m < l(a)

  /// StructuralError unless sizes and indices are consistent.
  void validate() const;
  Arrow l_arrow() const;                        // A -> N
  Arrow g_arrow() const;                        // E x_N A -> X
  std::uint64_t max_length() const;
  /// The budget raised so that every fiber and every target list enumerates.
  Budget fit(Budget budget) const;
};

/// g'(m, a) = g(IdUntil(m, l(a)), a) on N x A_{>0}.
Arrow extend_to_total(const Instance& inst, const Budget& budget);

/// h : A -> L(X) with h = [] where l vanishes and List[g', l] elsewhere.
/// Rechecks both equations and raises DefectError if either fails.
Arrow construct_h(const Instance& inst, const Budget& budget);

struct VerifyReport {
  setmodel::LawReport checks;
  Budget budget;

  bool pass() const { return checks.all_pass(); }
};

/// len . h = l and g = nth . (Id x_N h), on all enumerated elements.
VerifyReport verify_solution(const Instance& inst, const Arrow& h, const Budget& budget);

struct BruteForce {
  std::vector<Arrow> solutions;  // in candidate order
  std::uint64_t candidates = 0;  // |X|^(sum of l)
};

/// Every h with len . h = l, filtered by the two equations. BudgetError when
/// the candidate count exceeds card_cap.
BruteForce brute_force_solutions(const Instance& inst, const Budget& budget);

/// Replays the uniqueness argument for two solutions: agreement of nthDef
/// at every default and index, equality of h1(a) and h2(a) under a default
/// parameter, and the final equality after splitting A by l = 0. Raises
/// ConstraintError when h1 or h2 is not a solution.
VerifyReport uniqueness_by_theory(const Instance& inst, const Arrow& h1, const Arrow& h2, const Budget& budget);

/// nth_Y(m, L(f) l) = f(nth_X(m, l)) for `samples` random f : X -> Y.
setmodel::LawResult check_nth_naturality(const ObjExpr& X, const ObjExpr& Y, std::size_t samples,
                                         const Budget& budget);

}  // namespace polylist::polyadj
