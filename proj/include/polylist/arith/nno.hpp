#pragma once

#include "polylist/setmodel/limits.hpp"
#include "polylist/setmodel/report.hpp"

#include <cstdint>
#include <string>

namespace polylist::arith {

using setmodel::Arrow;
using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

/// The natural numbers object (N, 0, s) of the set model.
struct NnoKit {
  ObjExpr N;
  Arrow zero;  // 1 -> N
  Arrow succ;  // N -> N
};

const NnoKit& nno();

/// Parametrized primitive recursion.
///
/// Given g : A -> B and h : A*N*B -> B, returns the unique f : A*N -> B with
/// f(a,0) = g(a) and f(a,sn) = h(a,n,f(a,n)). Evaluation iterates h n times
/// starting from g(a).
Arrow nno_rec(const Arrow& g, const Arrow& h, std::string label = {});

/// Checks both defining equations of nno_rec for f on all enumerated (a,n).
setmodel::LawResult check_nno_rec_equations(std::string id, const Arrow& g, const Arrow& h,
                                            const Arrow& f, const Budget& budget);

/// Number of arrows A*N -> B, with N cut at budget.nat_max, that satisfy both
/// defining equations. A and B must enumerate completely within the budget;
/// the search visits |B|^(|A|*(nat_max+1)) tables and refuses anything larger
/// than card_cap (BudgetError).
std::uint64_t count_nno_rec_solutions(const Arrow& g, const Arrow& h, const Budget& budget);

}  // namespace polylist::arith
