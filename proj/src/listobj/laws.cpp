#include "polylist/listobj/laws.hpp"

#include "polylist/setmodel/random.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace polylist::listobj {

using setmodel::check_all;
using setmodel::check_law;
using setmodel::compose;
using setmodel::constant;
using setmodel::enumerate;
using setmodel::LawAccumulator;
using setmodel::LawReport;
using setmodel::LawResult;
using setmodel::LawRng;
using setmodel::merged;
using setmodel::pairing;
using setmodel::proj;
using setmodel::render;
using setmodel::restrict;

namespace {

ObjExpr N() { return ObjExpr::nat(); }

Arrow app(const Arrow& f, const std::vector<Arrow>& args) { return compose(f, pairing(args)); }

// Projections and arithmetic over one fixed domain.
struct Terms {
  ObjExpr dom;
  Arrow v(std::size_t i) const { return dom.is(ObjExpr::Kind::prod) ? proj(dom, i) : setmodel::identity(dom); }
  Arrow lit(std::uint64_t n) const { return constant(dom, N(), Elem::num(n)); }
  Arrow minus(const Arrow& a, const Arrow& b) const { return app(arith::monus(), {a, b}); }
  Arrow plus(const Arrow& a, const Arrow& b) const { return app(arith::add(), {a, b}); }
  Arrow s(const Arrow& a) const { return compose(arith::nno().succ, a); }
  Arrow p(const Arrow& a) const { return compose(arith::pred(), a); }
  Arrow nil(const ObjExpr& LX) const { return constant(dom, LX, Elem::seq(std::vector<Elem>{})); }
};

LawResult law_in(std::string id, const ObjExpr& ctx, const Arrow& lhs, const Arrow& rhs, const Budget& b) {
  return check_law(std::move(id), restrict(lhs, ctx), restrict(rhs, ctx), b);
}

// Runs `one` on `samples` random draws and keeps the first failure.
template <class F>
LawResult sampled(std::string id, std::size_t samples, F&& one) {
  LawAccumulator acc(std::move(id));
  for (std::size_t i = 0; i < samples && acc.ok(); ++i) acc.merge(one(i));
  return acc.result();
}

std::optional<std::string> mismatch(const Elem& got, const Elem& want, const ObjExpr& o) {
  if (got == want) return std::nullopt;
  return "got " + render(got, o) + ", want " + render(want, o);
}

void recursor_laws(LawReport& rep, const ListOps& ops, const Budget& b) {
  const ListKit& k = ops.kit;
  const ObjExpr U = ObjExpr::unit();
  const ObjExpr UL = ObjExpr::prod({U, k.LX});
  {
    ObjExpr step = ObjExpr::prod({U, k.X, k.LX, N()});
    rep.add(check_list_rec_equations("list.rec.len", arith::nno().zero, compose(arith::nno().succ, proj(step, 3)),
                                     compose(ops.len, proj(UL, 1)), b));
  }
  {
    ObjExpr step = ObjExpr::prod({U, k.X, k.LX, k.LX});
    rep.add(check_list_rec_equations("list.rec.tr", k.nil, proj(step, 2), compose(ops.tr, proj(UL, 1)), b));
  }
  {
    ObjExpr step = ObjExpr::prod({k.X, k.X, k.LX, k.X});
    rep.add(check_list_rec_equations("list.rec.zerothDef", setmodel::identity(k.X), proj(step, 1), ops.zeroth_def,
                                     b));
  }
  {
    ObjExpr step = ObjExpr::prod({k.LX, k.X, k.LX, k.LX});
    ObjExpr LL = ObjExpr::prod({k.LX, k.LX});
    rep.add(check_list_rec_equations("list.rec.concat", setmodel::identity(k.LX),
                                     app(k.cons, {proj(step, 1), proj(step, 3)}),
                                     app(ops.concat, {proj(LL, 1), proj(LL, 0)}), b));
  }
  {
    ObjExpr step = ObjExpr::prod({k.LX, N(), k.LX});
    ObjExpr LN = ObjExpr::prod({k.LX, N()});
    rep.add(arith::check_nno_rec_equations("nno.rec.tail", setmodel::identity(k.LX), compose(ops.tr, proj(step, 2)),
                                           app(ops.tail, {proj(LN, 1), proj(LN, 0)}), b));
  }
}

void shape_laws(LawReport& rep, const ListOps& ops, const Budget& b) {
  const ListKit& k = ops.kit;
  // every list is [] or exactly one cons
  {
    LawAccumulator acc("list.coprod");
    std::set<Elem> images;
    Budget shorter = b;
    shorter.len_max = b.len_max == 0 ? 0 : b.len_max - 1;
    ObjExpr XL = ObjExpr::prod({k.X, k.LX});
    const Elem empty = k.nil(Elem::star());
    for (const auto& xl : b.len_max == 0 ? std::vector<Elem>{} : enumerate(XL, shorter).elems) {
      acc.count();
      Elem c = k.cons(xl);
      if (c == empty) acc.fail(render(xl, XL) + ": cons hits []");
      if (!images.insert(c).second) acc.fail(render(xl, XL) + ": cons not injective");
    }
    for (const auto& l : enumerate(k.LX, b).elems) {
      acc.count();
      if (!(l == empty) && !images.count(l)) acc.fail(render(l, k.LX) + ": neither [] nor a cons");
    }
    rep.add(acc.result());
  }
  rep.add(check_all("list.decompose", k.LX, b, [&](const Elem& l) -> std::optional<std::string> {
    if (l.size() == 0) return std::nullopt;
    auto [x, rest] = decompose_nonempty(l);
    return mismatch(k.cons(Elem::tup({x, rest})), l, k.LX);
  }));

  const Terms l{k.LX};
  rep.add(law_in("list.lenZero", arith::where_all_zero(k.LX, {ops.len}), l.v(0), l.nil(k.LX), b));
  {
    ObjExpr XL = ObjExpr::prod({k.X, k.LX});
    const Terms t{XL};
    ObjExpr nonempty = arith::where_all_zero(XL, {t.minus(t.lit(1), compose(ops.len, t.v(1)))});
    Arrow rebuilt = app(k.cons, {ops.zeroth_def, compose(ops.tr, t.v(1))});
    rep.add(law_in("list.decomp", nonempty, t.v(1), rebuilt, b));
    rep.add(law_in("zerothDef.empty", arith::where_all_zero(XL, {compose(ops.len, t.v(1))}), ops.zeroth_def, t.v(0),
                   b));
  }
  rep.add(check_law("list.lenTr", compose(ops.len, ops.tr), compose(arith::pred(), ops.len), b));
  {
    ObjExpr NL = ObjExpr::prod({N(), k.LX});
    const Terms t{NL};
    Arrow len_l = compose(ops.len, t.v(1));
    rep.add(check_law("list.lenTail", compose(ops.len, ops.tail), t.minus(len_l, t.v(0)), b));
    rep.add(law_in("list.tailEmpty", arith::where_all_zero(NL, {t.minus(len_l, t.v(0))}), ops.tail, t.nil(k.LX), b));
    rep.add(check_law("tail.zero", app(ops.tail, {t.lit(0), t.v(1)}), t.v(1), b));
  }
}

void nth_laws(LawReport& rep, const ListOps& ops, const Budget& b) {
  const ListKit& k = ops.kit;
  ObjExpr XNL = ObjExpr::prod({k.X, N(), k.LX});
  const Terms t{XNL};
  Arrow len_l = compose(ops.len, t.v(2));
  rep.add(law_in("nthDef.beyond", arith::where_all_zero(XNL, {t.minus(len_l, t.v(1))}), ops.nth_def, t.v(0), b));
  {
    ObjExpr XXNL = ObjExpr::prod({k.X, k.X, N(), k.LX});
    const Terms u{XXNL};
    ObjExpr inside = arith::where_all_zero(XXNL, {u.minus(u.s(u.v(2)), compose(ops.len, u.v(3)))});
    rep.add(law_in("nthDef.default-irrelevant", inside, app(ops.nth_def, {u.v(0), u.v(2), u.v(3)}),
                   app(ops.nth_def, {u.v(1), u.v(2), u.v(3)}), b));
  }
  rep.add(check_all("nthDef.positional", XNL, b, [&](const Elem& e) -> std::optional<std::string> {
    const auto& items = e.at(2).items();
    const auto& n = e.at(1).as_num();
    Elem want = n < items.size() ? items[static_cast<std::size_t>(n)] : e.at(0);
    return mismatch(ops.nth_def(e), want, k.X);
  }));
  {
    ObjExpr XL = ObjExpr::prod({k.X, k.LX});
    const Terms u{XL};
    rep.add(check_law("nthDef.zeroth", app(ops.nth_def, {u.v(0), u.lit(0), u.v(1)}), ops.zeroth_def, b));
  }
}

void concat_laws(LawReport& rep, const ListOps& ops, const Budget& b) {
  const ListKit& k = ops.kit;
  ObjExpr LL = ObjExpr::prod({k.LX, k.LX});
  const Terms t{LL};
  rep.add(check_law("concat.len", compose(ops.len, ops.concat),
                    t.plus(compose(ops.len, t.v(0)), compose(ops.len, t.v(1))), b));
  rep.add(check_law("concat.nil-left", app(ops.concat, {t.nil(k.LX), t.v(1)}), t.v(1), b));
  rep.add(check_law("concat.nil-right", app(ops.concat, {t.v(0), t.nil(k.LX)}), t.v(0), b));
  rep.add(check_all("concat.oracle", LL, b, [&](const Elem& e) -> std::optional<std::string> {
    std::vector<Elem> items = e.at(0).items();
    items.insert(items.end(), e.at(1).items().begin(), e.at(1).items().end());
    return mismatch(ops.concat(e), Elem::seq(std::move(items)), k.LX);
  }));
  {
    ObjExpr XLL = ObjExpr::prod({k.X, k.LX, k.LX});
    const Terms u{XLL};
    rep.add(check_law("concat.cons", app(ops.concat, {app(k.cons, {u.v(0), u.v(1)}), u.v(2)}),
                      app(k.cons, {u.v(0), app(ops.concat, {u.v(1), u.v(2)})}), b));
  }
  rep.add(check_all("singleton.value", k.X, b, [&](const Elem& x) -> std::optional<std::string> {
    return mismatch(ops.singleton(x), Elem::seq({x}), k.LX);
  }));
}

void expansion_laws(LawReport& rep, const ListOps& ops, const Budget& b) {
  const ListKit& k = ops.kit;
  ObjExpr XNL = ObjExpr::prod({k.X, N(), k.LX});
  const Terms t{XNL};
  Arrow x = t.v(0), m = t.v(1), l = t.v(2);
  Arrow len_l = compose(ops.len, l);
  Arrow empty = t.nil(k.LX);
  {
    Arrow grown = app(k.cons, {app(ops.nth_def, {x, m, l}), app(ops.tail, {t.s(m), l})});
    rep.add(check_law("tail.expand", app(ops.tail, {m, l}),
                      app(arith::ite_leq(k.LX), {empty, grown, len_l, m}), b));
  }
  {
    Arrow grown = app(k.cons, {app(ops.nth_def, {x, t.p(m), l}), app(ops.tail, {m, l})});
    Arrow rhs = app(arith::ite3(k.LX), {app(ops.tail, {m, l}), empty, grown, m, t.minus(t.s(len_l), m)});
    rep.add(check_law("tail.expand-pred", app(ops.tail, {t.p(m), l}), rhs, b));
  }
  rep.add(check_law("H.base", app(ops.build_H, {x, t.lit(0), l}), empty, b));
  rep.add(check_law("H.full", app(ops.build_H, {x, len_l, l}), l, b));
  rep.add(check_law("H.recurrence", app(ops.build_H, {x, t.s(m), l}),
                    app(ops.build_A, {x, m, l, app(ops.build_H, {x, m, l})}), b));
  {
    ObjExpr D = ObjExpr::prod({k.X, N(), k.LX, k.LX});
    const Terms u{D};
    ObjExpr short_l = arith::where_all_zero(D, {u.minus(compose(ops.len, u.v(2)), u.v(1))});
    rep.add(law_in("A.short", short_l, ops.build_A, u.v(3), b));
  }
  // extensional equality of lists through len and nthDef
  {
    LawAccumulator acc("list.eqNoExt");
    auto ls = enumerate(k.LX, b).elems;
    auto xs = enumerate(k.X, b).elems;
    const std::uint64_t top = std::max(b.nat_max, b.len_max);
    auto agree = [&](const Elem& l1, const Elem& l2) {
      if (!(ops.len(l1) == ops.len(l2))) return false;
      for (const auto& xe : xs)
        for (std::uint64_t n = 0; n <= top; ++n)
          if (!(ops.nth_def(Elem::tup({xe, Elem::num(n), l1})) == ops.nth_def(Elem::tup({xe, Elem::num(n), l2}))))
            return false;
      return true;
    };
    for (std::size_t i = 0; i < ls.size() && acc.ok(); ++i)
      for (std::size_t j = i + 1; j < ls.size() && acc.ok(); ++j) {
        acc.count();
        if (agree(ls[i], ls[j]))
          acc.fail("(" + render(ls[i], k.LX) + "," + render(ls[j], k.LX) + "): distinct lists agree on len and nthDef");
      }
    rep.add(acc.result());
  }
}

void naturality_laws(LawReport& rep, const ListOps& ops, const Budget& b, LawRng& rng, std::size_t samples) {
  const ListKit& k = ops.kit;
  const ObjExpr Y = setmodel::letters(3);
  const ObjExpr Z = setmodel::letters(2);
  const ListOps oy = list_ops(Y);
  std::vector<Arrow> fs;
  for (std::size_t i = 0; i < samples; ++i) fs.push_back(setmodel::random_fin_arrow(k.X, Y, rng));
  std::vector<Arrow> maps;
  for (const auto& f : fs) maps.push_back(map_list(f));

  auto each = [&](std::string id, auto&& law) {
    rep.add(sampled(std::move(id), samples, [&](std::size_t i) { return law(fs[i], maps[i]); }));
  };
  const ObjExpr XL = ObjExpr::prod({k.X, k.LX});
  const ObjExpr NL = ObjExpr::prod({N(), k.LX});
  const ObjExpr XNL = ObjExpr::prod({k.X, N(), k.LX});
  each("nat.cons-map", [&](const Arrow& f, const Arrow& Lf) {
    const Terms t{XL};
    return check_law("", compose(Lf, k.cons), app(oy.kit.cons, {compose(f, t.v(0)), compose(Lf, t.v(1))}), b);
  });
  each("nat.len-map", [&](const Arrow&, const Arrow& Lf) { return check_law("", compose(oy.len, Lf), ops.len, b); });
  each("nat.tr-map", [&](const Arrow&, const Arrow& Lf) {
    return check_law("", compose(oy.tr, Lf), compose(Lf, ops.tr), b);
  });
  each("nat.tail-map", [&](const Arrow&, const Arrow& Lf) {
    const Terms t{NL};
    return check_law("", app(oy.tail, {t.v(0), compose(Lf, t.v(1))}), compose(Lf, ops.tail), b);
  });
  each("nat.zerothDef-map", [&](const Arrow& f, const Arrow& Lf) {
    const Terms t{XL};
    return check_law("", app(oy.zeroth_def, {compose(f, t.v(0)), compose(Lf, t.v(1))}), compose(f, ops.zeroth_def),
                     b);
  });
  each("nat.nthDef-map", [&](const Arrow& f, const Arrow& Lf) {
    const Terms t{XNL};
    return check_law("", app(oy.nth_def, {compose(f, t.v(0)), t.v(1), compose(Lf, t.v(2))}),
                     compose(f, ops.nth_def), b);
  });
  rep.add(check_law("functor.map-id", map_list(setmodel::identity(k.X)), setmodel::identity(k.LX), b));
  rep.add(sampled("functor.map-comp", samples, [&](std::size_t i) {
    Arrow g = setmodel::random_fin_arrow(Y, Z, rng);
    return check_law("", map_list(compose(g, fs[i])), compose(map_list(g), maps[i]), b);
  }));
  rep.add(sampled("list.rec.map", std::min<std::size_t>(samples, 10), [&](std::size_t i) {
    const ObjExpr U = ObjExpr::unit();
    ObjExpr step = ObjExpr::prod({U, k.X, k.LX, oy.kit.LX});
    Arrow h = app(oy.kit.cons, {compose(fs[i], proj(step, 1)), proj(step, 3)});
    return check_list_rec_equations("", oy.kit.nil, h, compose(maps[i], proj(ObjExpr::prod({U, k.LX}), 1)), b);
  }));
}

void sequence_laws(LawReport& rep, const ListOps& ops, const Budget& b, LawRng& rng, std::size_t samples) {
  const ListKit& k = ops.kit;
  // an index object for the families; it must be empty when X is
  const ObjExpr A = setmodel::letters(k.X.fin_size() == 0 ? 0 : 2);
  struct Family {
    Arrow f, p, seq, list;
  };
  std::vector<Family> fam;
  for (std::size_t i = 0; i < samples; ++i) {
    Arrow f = setmodel::random_sequence_family(A, k.X, rng);
    Arrow p = setmodel::random_length_map(A, b.nat_max, rng);
    fam.push_back({f, p, seq_build(f), list_build(f, p)});
  }
  auto each = [&](std::string id, auto&& law) {
    rep.add(sampled(std::move(id), samples, [&](std::size_t i) { return law(fam[i]); }));
  };
  const ObjExpr NNA = ObjExpr::prod({N(), N(), A});
  const ObjExpr NA = ObjExpr::prod({N(), A});
  each("seq.lenList", [&](const Family& F) { return check_law("", compose(ops.len, F.list), F.p, b); });
  each("seq.empty", [&](const Family& F) {
    const Terms t{NA};
    return check_law("", app(F.seq, {t.v(0), t.lit(0), t.v(1)}), t.nil(k.LX), b);
  });
  each("seq.head", [&](const Family& F) {
    const Terms t{NNA};
    Arrow m = t.v(0), n = t.v(1), a = t.v(2);
    return check_law("", app(F.seq, {m, t.s(n), a}),
                     app(k.cons, {app(F.f, {m, a}), app(F.seq, {t.s(m), n, a})}), b);
  });
  each("seq.trSeq", [&](const Family& F) {
    const Terms t{NNA};
    Arrow m = t.v(0), n = t.v(1), a = t.v(2);
    return check_law("", compose(ops.tr, F.seq), app(F.seq, {t.s(m), t.p(n), a}), b);
  });
  each("seq.iterTrSeq", [&](const Family& F) {
    const ObjExpr D = ObjExpr::prod({N(), N(), N(), A});
    const Terms t{D};
    Arrow kk = t.v(0), m = t.v(1), n = t.v(2), a = t.v(3);
    return check_law("", app(ops.tail, {kk, app(F.seq, {m, n, a})}),
                     app(F.seq, {t.plus(m, kk), t.minus(n, kk), a}), b);
  });
  each("seq.iterTrList", [&](const Family& F) {
    const Terms t{NA};
    Arrow kk = t.v(0), a = t.v(1);
    return check_law("", app(ops.tail, {kk, compose(F.list, a)}),
                     app(F.seq, {kk, t.minus(compose(F.p, a), kk), a}), b);
  });
  each("seq.nthList", [&](const Family& F) {
    const ObjExpr D = ObjExpr::prod({k.X, N(), A});
    const Terms t{D};
    Arrow x = t.v(0), m = t.v(1), a = t.v(2);
    ObjExpr below = arith::where_all_zero(D, {t.minus(t.s(m), compose(F.p, a))});
    return law_in("", below, app(ops.nth_def, {x, m, compose(F.list, a)}), app(F.f, {m, a}), b);
  });
  each("seq.linear-oracle", [&](const Family& F) {
    return check_all("", NNA, b, [&](const Elem& e) {
      return mismatch(F.seq(e), seq_direct(F.f, e.at(0), e.at(1), e.at(2)), k.LX);
    });
  });
}

}  // namespace

LawReport run_list_laws(const Budget& budget, std::size_t card_x, const ListLawOptions& opt) {
  return run_list_laws(budget, list_ops(setmodel::letters(card_x)), opt);
}

LawReport run_list_laws(const Budget& budget, const ListOps& ops, const ListLawOptions& opt) {
  LawReport rep;
  LawRng rng(budget.seed);
  recursor_laws(rep, ops, budget);
  shape_laws(rep, ops, budget);
  nth_laws(rep, ops, budget);
  concat_laws(rep, ops, budget);
  expansion_laws(rep, ops, budget);
  naturality_laws(rep, ops, budget, rng, opt.naturality_samples);
  sequence_laws(rep, ops, budget, rng, opt.sequence_samples);
  return rep;
}

}  // namespace polylist::listobj
