#pragma once

#include "polylist/arith/nno.hpp"

#include <vector>

namespace polylist::arith {

/// Arithmetic arrows on N, all obtained from nno_rec:
///
///   x + 0 = x            x + sy = s(x + y)
///   x * 0 = 0            x * sy = (x * y) + x
///   P(0)  = 0            P(sy)  = y
///   x - 0 = x            x - sy = P(x - y)      (truncated subtraction)
///
/// min, max and |x,y| are composites of + and truncated subtraction.
struct ArithKit {
  Arrow add;      // N*N -> N
  Arrow mul;      // N*N -> N
  Arrow pred;     // N -> N
  Arrow monus;    // N*N -> N
  Arrow min;      // x - (x - y)
  Arrow max;      // x + (y - x)
  Arrow absdiff;  // (x - y) + (y - x)
};

const ArithKit& standard_arith();

/// Kit whose min/max/absdiff are rebuilt on top of the supplied truncated
/// subtraction. Used to inject mutants into the law suite.
ArithKit arith_with_monus(const Arrow& monus);

const Arrow& add();
const Arrow& mul();
const Arrow& pred();
const Arrow& monus();
const Arrow& min_op();
const Arrow& max_op();
const Arrow& absdiff();

/// ITE_B : B*B*N -> B, first branch on 0, second on any successor.
Arrow ite(const ObjExpr& B);
/// B*B*N*N -> B selecting the first branch when m <= n, i.e. m - n = 0.
Arrow ite_leq(const ObjExpr& B);
/// B*B*N*N -> B selecting the first branch when m < n, i.e. s(m) - n = 0.
Arrow ite_lt(const ObjExpr& B);
/// B*B*B*N*N -> B: x if m = 0, else y if n = 0, else z.
Arrow ite3(const ObjExpr& B);

/// m <= n evaluated as m - n = 0 through the kit.
bool leq_holds(const Elem& m, const Elem& n, const ArithKit& kit = standard_arith());
/// m < n evaluated as s(m) - n = 0 through the kit.
bool lt_holds(const Elem& m, const Elem& n, const ArithKit& kit = standard_arith());

/// IdUntil(m, n) = min(m, P n).
const Arrow& id_until();

/// Partition of an arrow's domain into (t = 0) and (t > 0). The positive
/// part is the equalizer of 1 - t and 0.
struct ZeroSplit {
  setmodel::Equalizer zero;
  setmodel::Equalizer positive;
};
ZeroSplit split_by_zero(const Arrow& t);

/// Partition into (u < w), the equalizer of s(u) - w and 0, and (u >= w),
/// the equalizer of w - u and 0.
struct LtSplit {
  setmodel::Equalizer lt;
  setmodel::Equalizer geq;
};
LtSplit split_by_lt(const Arrow& u, const Arrow& w);

/// Subobject of dom where t : dom -> N vanishes.
ObjExpr where_zero(const Arrow& t);

/// Subobject of dom where every guard vanishes, one nested Sub per guard in
/// order. Guards are arrows out of dom; they are restricted as the nesting
/// deepens.
ObjExpr where_all_zero(const ObjExpr& dom, const std::vector<Arrow>& guards);

}  // namespace polylist::arith
