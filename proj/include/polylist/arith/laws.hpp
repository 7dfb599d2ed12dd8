#pragma once

#include "polylist/arith/ops.hpp"
#include "polylist/setmodel/report.hpp"

#include <cstdint>

namespace polylist::arith {

/// Exhaustive check of the arithmetic and order laws for all naturals up to
/// budget.nat_max, evaluated through the arrows of `kit`:
/// recursor equations, semiring laws, truncated-subtraction calculus, the
/// five-way characterization of <=, partial-order axioms and monotonicity,
/// a < b iff b - a > 0, sx - (x - y) = s(x - (x - y)), n > 0 => n = s(P n),
/// both IdUntil properties, and agreement with big-integer oracles.
setmodel::LawReport run_arith_laws(const Budget& budget, const ArithKit& kit = standard_arith());

/// add/mul/pred/monus against direct big-integer formulas on all pairs up to
/// `bound`.
setmodel::LawReport check_arith_oracles(std::uint64_t bound, const ArithKit& kit = standard_arith());

}  // namespace polylist::arith
