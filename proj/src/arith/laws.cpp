#include "polylist/arith/laws.hpp"

#include <functional>
#include <optional>

namespace polylist::arith {

using setmodel::check_law;
using setmodel::compose;
using setmodel::constant;
using setmodel::enumerate;
using setmodel::LawAccumulator;
using setmodel::LawReport;
using setmodel::LawResult;
using setmodel::merged;
using setmodel::Natural;
using setmodel::pairing;
using setmodel::proj;
using setmodel::restrict;
using setmodel::terminal_map;

namespace {

// Small combinator vocabulary for writing laws over N^k.
struct Vocab {
  const ArithKit& kit;
  ObjExpr dom;

  Arrow var(std::size_t i) const {
    return dom.is(ObjExpr::Kind::prod) ? proj(dom, i) : setmodel::identity(dom);
  }
  Arrow lit(std::uint64_t n) const { return constant(dom, ObjExpr::nat(), Elem::num(n)); }
  Arrow bin(const Arrow& op, const Arrow& a, const Arrow& b) const { return compose(op, pairing({a, b})); }
  Arrow minus(const Arrow& a, const Arrow& b) const { return bin(kit.monus, a, b); }
  Arrow plus(const Arrow& a, const Arrow& b) const { return bin(kit.add, a, b); }
  Arrow times(const Arrow& a, const Arrow& b) const { return bin(kit.mul, a, b); }
  Arrow s(const Arrow& a) const { return compose(nno().succ, a); }
  Arrow p(const Arrow& a) const { return compose(kit.pred, a); }
  Arrow zero() const { return lit(0); }
  // ITE_N(0, 1, g): 0 when g = 0, 1 otherwise.
  Arrow truth(const Arrow& g) const { return compose(ite(ObjExpr::nat()), pairing({lit(0), lit(1), g})); }
};

ObjExpr nat_power(std::size_t k) { return ObjExpr::prod(std::vector<ObjExpr>(k, ObjExpr::nat())); }

LawResult law_in(std::string id, const ObjExpr& ctx, const Arrow& lhs, const Arrow& rhs, const Budget& b) {
  return check_law(std::move(id), restrict(lhs, ctx), restrict(rhs, ctx), b);
}

LawResult for_all(std::string id, const ObjExpr& dom, const Budget& b,
                  const std::function<std::optional<std::string>(const Elem&)>& pred) {
  return setmodel::check_all(std::move(id), dom, b, pred);
}

Elem N(std::uint64_t n) { return Elem::num(n); }

}  // namespace

LawReport run_arith_laws(const Budget& budget, const ArithKit& kit) {
  LawReport rep;
  const ObjExpr N1 = ObjExpr::nat();
  const ObjExpr N2 = nat_power(2);
  const ObjExpr N3 = nat_power(3);
  const Vocab v1{kit, N1}, v2{kit, N2}, v3{kit, N3};
  const Arrow x1 = v1.var(0);
  const Arrow x = v2.var(0), y = v2.var(1);
  const Arrow a = v3.var(0), b = v3.var(1), c = v3.var(2);
  const Arrow idu = compose(kit.min, pairing({x, v2.p(y)}));

  // recursor equations
  {
    ObjExpr step = nat_power(3);
    rep.add(check_nno_rec_equations("nno.rec.add", setmodel::identity(N1),
                                    compose(nno().succ, proj(step, 2)), kit.add, budget));
    rep.add(check_nno_rec_equations("nno.rec.mul", compose(nno().zero, terminal_map(N1)),
                                    compose(kit.add, pairing({proj(step, 2), proj(step, 0)})), kit.mul,
                                    budget));
    rep.add(merged("nno.rec.pred", {check_law("", compose(kit.pred, nno().zero), nno().zero, budget),
                                    check_law("", compose(kit.pred, nno().succ), setmodel::identity(N1),
                                              budget)}));
    rep.add(check_nno_rec_equations("nno.rec.monus", setmodel::identity(N1),
                                    compose(kit.pred, proj(step, 2)), kit.monus, budget));
  }

  // semiring
  rep.add(check_law("semiring.add.comm", v2.plus(x, y), v2.plus(y, x), budget));
  rep.add(check_law("semiring.add.assoc", v3.plus(v3.plus(a, b), c), v3.plus(a, v3.plus(b, c)), budget));
  rep.add(merged("semiring.add.unit", {check_law("", v1.plus(x1, v1.zero()), x1, budget),
                                       check_law("", v1.plus(v1.zero(), x1), x1, budget)}));
  rep.add(check_law("semiring.mul.comm", v2.times(x, y), v2.times(y, x), budget));
  rep.add(check_law("semiring.mul.assoc", v3.times(v3.times(a, b), c), v3.times(a, v3.times(b, c)), budget));
  rep.add(merged("semiring.mul.unit", {check_law("", v1.times(x1, v1.lit(1)), x1, budget),
                                       check_law("", v1.times(v1.zero(), x1), v1.zero(), budget)}));
  rep.add(check_law("semiring.distrib", v3.times(a, v3.plus(b, c)),
                    v3.plus(v3.times(a, b), v3.times(a, c)), budget));

  // truncated subtraction calculus
  rep.add(check_law("monus.succ-cancel", v2.minus(v2.s(x), v2.s(y)), v2.minus(x, y), budget));
  rep.add(check_law("minmax.min.sym", kit.min, v2.minus(y, v2.minus(y, x)), budget));
  rep.add(check_law("minmax.max.sym", kit.max, v2.plus(y, v2.minus(x, y)), budget));
  rep.add(for_all("absdiff.zero-iff-eq", N2, budget, [&](const Elem& e) -> std::optional<std::string> {
    bool zero = kit.absdiff(e) == N(0);
    bool same = e.at(0) == e.at(1);
    if (zero != same) return std::string("|x,y| = 0 is ") + (zero ? "true" : "false");
    return std::nullopt;
  }));

  // basic arithmetic
  rep.add(check_law("basic.monus-add", v3.minus(a, v3.plus(b, c)), v3.minus(v3.minus(a, b), c), budget));
  rep.add(check_law("basic.absdiff-max", v2.bin(kit.absdiff, kit.max, y), kit.monus, budget));
  rep.add(check_law("basic.monus-product", v2.times(v2.minus(x, y), v2.minus(y, x)), v2.zero(), budget));

  // a <= b five ways
  rep.add(for_all("leq.equiv", N2, budget, [&](const Elem& e) -> std::optional<std::string> {
    const Elem& ea = e.at(0);
    const Elem& eb = e.at(1);
    bool t1 = kit.monus(e) == N(0);
    bool t2 = kit.max(e) == eb;
    bool t3 = kit.min(e) == ea;
    bool t4 = false, t5 = false;
    for (std::uint64_t w = 0; w <= budget.nat_max; ++w) {
      t4 = t4 || kit.add(Elem::tup({ea, N(w)})) == eb;
      t5 = t5 || ea == kit.monus(Elem::tup({eb, N(w)}));
    }
    if (t1 == t2 && t1 == t3 && t1 == t4 && t1 == t5) return std::nullopt;
    std::string s = "truth values";
    for (bool t : {t1, t2, t3, t4, t5}) s += t ? " 1" : " 0";
    return s;
  }));
  {
    ObjExpr leq = where_all_zero(N2, {kit.monus});
    Arrow wit = v2.minus(y, x);
    rep.add(merged("leq.witness", {law_in("", leq, v2.plus(x, wit), y, budget),
                                   law_in("", leq, v2.minus(y, wit), x, budget)}));
  }

  // partial order and monotonicity
  rep.add(check_law("order.refl", v1.minus(x1, x1), v1.zero(), budget));
  rep.add(law_in("order.antisym", where_all_zero(N2, {kit.monus, v2.minus(y, x)}), x, y, budget));
  rep.add(law_in("order.trans", where_all_zero(N3, {v3.minus(a, b), v3.minus(b, c)}), v3.minus(a, c), v3.zero(),
                 budget));
  {
    ObjExpr ab = where_all_zero(N3, {v3.minus(a, b)});
    rep.add(law_in("order.mono-add", ab, v3.minus(v3.plus(a, c), v3.plus(b, c)), v3.zero(), budget));
    rep.add(law_in("order.mono-mul", ab, v3.minus(v3.times(a, c), v3.times(b, c)), v3.zero(), budget));
    rep.add(law_in("order.mono-monus", ab, v3.minus(v3.minus(a, c), v3.minus(b, c)), v3.zero(), budget));
  }
  rep.add(check_law("order.lt-succ", v1.minus(v1.s(x1), v1.plus(x1, v1.lit(1))), v1.zero(), budget));

  // facts used by the list constructions
  rep.add(check_law("calc.lt-iff-monus-pos", v2.truth(v2.minus(v2.s(x), y)),
                    v2.truth(v2.minus(v2.lit(1), v2.minus(y, x))), budget));
  rep.add(check_law("calc.natCalc1", v2.minus(v2.s(x), v2.minus(x, y)),
                    v2.s(v2.minus(x, v2.minus(x, y))), budget));
  rep.add(law_in("pos.succ-pred", where_all_zero(N1, {v1.minus(v1.lit(1), x1)}), x1, v1.s(v1.p(x1)), budget));
  rep.add(law_in("idUntil.below", where_all_zero(N2, {v2.minus(v2.lit(1), y)}), v2.minus(v2.s(idu), y), v2.zero(),
                 budget));
  rep.add(law_in("idUntil.fixed", where_all_zero(N2, {v2.minus(v2.s(x), y)}), idu, x, budget));

  {
    Arrow it = ite(N1);
    rep.add(check_law("ite.zero", compose(it, pairing({x, y, v2.zero()})), x, budget));
    rep.add(check_law("ite.succ", compose(it, pairing({a, b, v3.s(c)})), b, budget));
  }

  rep.append(check_arith_oracles(budget.nat_max, kit));
  return rep;
}

LawReport check_arith_oracles(std::uint64_t bound, const ArithKit& kit) {
  Budget b;
  b.nat_max = bound;
  const ObjExpr N2 = nat_power(2);
  auto oracle2 = [&](std::string id, const Arrow& op, std::function<Natural(const Natural&, const Natural&)> f) {
    return for_all(std::move(id), N2, b, [&](const Elem& e) -> std::optional<std::string> {
      Natural want = f(e.at(0).as_num(), e.at(1).as_num());
      Elem got = op(e);
      if (got == Elem::num(want)) return std::nullopt;
      return "got " + got.to_string() + ", want " + Elem::num(want).to_string();
    });
  };
  LawReport rep;
  rep.add(oracle2("oracle.add", kit.add, [](const Natural& p, const Natural& q) { return Natural(p + q); }));
  rep.add(oracle2("oracle.mul", kit.mul, [](const Natural& p, const Natural& q) { return Natural(p * q); }));
  rep.add(oracle2("oracle.monus", kit.monus,
                  [](const Natural& p, const Natural& q) { return p > q ? Natural(p - q) : Natural(0); }));
  rep.add(for_all("oracle.pred", ObjExpr::nat(), b, [&](const Elem& e) -> std::optional<std::string> {
    const Natural& n = e.as_num();
    Elem want = Elem::num(n > 0 ? Natural(n - 1) : Natural(0));
    Elem got = kit.pred(e);
    if (got == want) return std::nullopt;
    return "got " + got.to_string() + ", want " + want.to_string();
  }));
  return rep;
}

}  // namespace polylist::arith
