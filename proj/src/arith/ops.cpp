#include "polylist/arith/ops.hpp"

#include "polylist/errors.hpp"

namespace polylist::arith {

using setmodel::compose;
using setmodel::compose_all;
using setmodel::constant;
using setmodel::identity;
using setmodel::pairing;
using setmodel::proj;
using setmodel::terminal_map;

namespace {

ObjExpr N() { return ObjExpr::nat(); }
ObjExpr NN() { return ObjExpr::prod({N(), N()}); }
ObjExpr NNN() { return ObjExpr::prod({N(), N(), N()}); }

// <pi2, pi1> on N*N
Arrow swap2() { return pairing({proj(NN(), 1), proj(NN(), 0)}).relabel("swap"); }

Arrow build_add() {
  // f(x,0) = x, f(x,sy) = s(f(x,y))
  Arrow step = compose(nno().succ, proj(NNN(), 2));
  return nno_rec(identity(N()), step, "add");
}

Arrow build_mul(const Arrow& plus) {
  // f(x,0) = 0, f(x,sy) = f(x,y) + x
  Arrow base = compose(nno().zero, terminal_map(N()));
  Arrow step = compose(plus, pairing({proj(NNN(), 2), proj(NNN(), 0)}));
  return nno_rec(base, step, "mul");
}

Arrow build_pred() {
  // f(*,0) = 0, f(*,sy) = y; P = f . <!, id>
  ObjExpr step_dom = ObjExpr::prod({ObjExpr::unit(), N(), N()});
  Arrow f = nno_rec(nno().zero, proj(step_dom, 1));
  return compose(f, pairing({terminal_map(N()), identity(N())})).relabel("P");
}

Arrow build_monus(const Arrow& p) {
  // f(x,0) = x, f(x,sy) = P(f(x,y))
  return nno_rec(identity(N()), compose(p, proj(NNN(), 2)), "monus");
}

ArithKit complete(Arrow plus, Arrow times, Arrow p, Arrow minus) {
  Arrow x = proj(NN(), 0);
  Arrow mn = compose(minus, pairing({x, minus})).relabel("min");
  Arrow mx = compose(plus, pairing({x, compose(minus, swap2())})).relabel("max");
  Arrow ad = compose(plus, pairing({minus, compose(minus, swap2())})).relabel("absdiff");
  return ArithKit{std::move(plus), std::move(times), std::move(p), std::move(minus),
                  std::move(mn),   std::move(mx),    std::move(ad)};
}

}  // namespace

const ArithKit& standard_arith() {
  static const ArithKit kit = [] {
    Arrow plus = build_add();
    Arrow times = build_mul(plus);
    Arrow p = setmodel::memoize(build_pred());
    Arrow minus = setmodel::memoize(build_monus(p));
    return complete(plus, times, p, minus);
  }();
  return kit;
}

ArithKit arith_with_monus(const Arrow& m) {
  if (!(m.dom() == NN()) || !(m.cod() == N()))
    throw StructuralError("truncated subtraction must be N*N -> N, got " + m.dom().to_string() +
                          " -> " + m.cod().to_string());
  const ArithKit& s = standard_arith();
  return complete(s.add, s.mul, s.pred, m);
}

const Arrow& add() { return standard_arith().add; }
const Arrow& mul() { return standard_arith().mul; }
const Arrow& pred() { return standard_arith().pred; }
const Arrow& monus() { return standard_arith().monus; }
const Arrow& min_op() { return standard_arith().min; }
const Arrow& max_op() { return standard_arith().max; }
const Arrow& absdiff() { return standard_arith().absdiff; }

Arrow ite(const ObjExpr& B) {
  // f((x,y),0) = x, f((x,y),sn) = y; ITE = f . <<pi1,pi2>,pi3>
  ObjExpr BB = ObjExpr::prod({B, B});
  ObjExpr step_dom = ObjExpr::prod({BB, N(), B});
  Arrow f = nno_rec(proj(BB, 0), compose(proj(BB, 1), proj(step_dom, 0)));
  ObjExpr dom = ObjExpr::prod({B, B, N()});
  return compose(f, pairing({pairing({proj(dom, 0), proj(dom, 1)}), proj(dom, 2)}))
      .relabel("ite[" + B.to_string() + "]");
}

Arrow ite_leq(const ObjExpr& B) {
  ObjExpr dom = ObjExpr::prod({B, B, N(), N()});
  Arrow guard = compose(monus(), pairing({proj(dom, 2), proj(dom, 3)}));
  return compose(ite(B), pairing({proj(dom, 0), proj(dom, 1), guard}))
      .relabel("ite_leq[" + B.to_string() + "]");
}

Arrow ite_lt(const ObjExpr& B) {
  ObjExpr dom = ObjExpr::prod({B, B, N(), N()});
  Arrow guard = compose(monus(), pairing({compose(nno().succ, proj(dom, 2)), proj(dom, 3)}));
  return compose(ite(B), pairing({proj(dom, 0), proj(dom, 1), guard}))
      .relabel("ite_lt[" + B.to_string() + "]");
}

Arrow ite3(const ObjExpr& B) {
  ObjExpr dom = ObjExpr::prod({B, B, B, N(), N()});
  Arrow inner = compose(ite(B), pairing({proj(dom, 1), proj(dom, 2), proj(dom, 4)}));
  return compose(ite(B), pairing({proj(dom, 0), inner, proj(dom, 3)}))
      .relabel("ite3[" + B.to_string() + "]");
}

bool leq_holds(const Elem& m, const Elem& n, const ArithKit& kit) {
  return kit.monus(Elem::tup({m, n})) == Elem::num(0);
}

bool lt_holds(const Elem& m, const Elem& n, const ArithKit& kit) {
  return kit.monus(Elem::tup({nno().succ(m), n})) == Elem::num(0);
}

const Arrow& id_until() {
  static const Arrow a =
      compose(min_op(), pairing({proj(NN(), 0), compose(pred(), proj(NN(), 1))})).relabel("idUntil");
  return a;
}

ObjExpr where_zero(const Arrow& t) {
  if (!(t.cod() == N())) throw StructuralError("guard must land in N, got " + t.cod().to_string());
  return ObjExpr::sub(t.dom(), t, compose(nno().zero, terminal_map(t.dom())));
}

ObjExpr where_all_zero(const ObjExpr& dom, const std::vector<Arrow>& guards) {
  ObjExpr ctx = dom;
  for (const auto& g : guards) ctx = where_zero(setmodel::restrict(g, ctx));
  return ctx;
}

ZeroSplit split_by_zero(const Arrow& t) {
  if (!(t.cod() == N())) throw StructuralError("split term must land in N, got " + t.cod().to_string());
  Arrow zero = compose(nno().zero, terminal_map(t.dom()));
  Arrow one = constant(t.dom(), N(), Elem::num(1));
  Arrow one_minus_t = compose(monus(), pairing({one, t}));
  return ZeroSplit{setmodel::equalizer_obj(t, zero), setmodel::equalizer_obj(one_minus_t, zero)};
}

LtSplit split_by_lt(const Arrow& u, const Arrow& w) {
  if (!(u.dom() == w.dom())) throw StructuralError("split terms must share a context");
  Arrow zero = compose(nno().zero, terminal_map(u.dom()));
  Arrow lt = compose(monus(), pairing({compose(nno().succ, u), w}));
  Arrow geq = compose(monus(), pairing({w, u}));
  return LtSplit{setmodel::equalizer_obj(lt, zero), setmodel::equalizer_obj(geq, zero)};
}

}  // namespace polylist::arith
