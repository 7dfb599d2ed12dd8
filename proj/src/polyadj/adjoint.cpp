#include "polylist/polyadj/adjoint.hpp"

#include "polylist/errors.hpp"
#include "polylist/setmodel/random.hpp"

#include <algorithm>

namespace polylist::polyadj {

using listobj::list_ops;
using listobj::ListOps;
using setmodel::check_law;
using setmodel::compose;
using setmodel::constant;
using setmodel::LawAccumulator;
using setmodel::LawResult;
using setmodel::pairing;
using setmodel::proj;
using setmodel::render;
using setmodel::restrict;

namespace {

ObjExpr N() { return ObjExpr::nat(); }

Arrow app(const Arrow& f, const std::vector<Arrow>& args) { return compose(f, pairing(args)); }

Elem empty_list() { return Elem::seq(std::vector<Elem>{}); }

LawResult failed(std::string id, std::string why) {
  LawResult r;
  r.id = std::move(id);
  r.pass = false;
  r.counterexample = std::move(why);
  return r;
}

// Every list of length n over a finite object with k elements, lexicographic.
std::vector<Elem> lists_of_length(std::uint64_t k, std::uint64_t n) {
  std::vector<Elem> out;
  if (n > 0 && k == 0) return out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::vector<Elem> items;
    for (auto d : digits) items.push_back(Elem::num(d));
    out.push_back(Elem::seq(std::move(items)));
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == k) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::string render_lengths(const std::vector<std::uint64_t>& ls) {
  std::string s = "l[";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s + "]";
}

}  // namespace

const EObject& make_E() {
  static const EObject e = [] {
    ObjExpr NN = ObjExpr::prod({N(), N()});
    Arrow guard = app(arith::monus(), {compose(arith::nno().succ, proj(NN, 0)), proj(NN, 1)}).relabel("s(m)-n");
    ObjExpr E = arith::where_zero(guard);
    return EObject{E, proj(E, 1).relabel("pi2E")};
  }();
  return e;
}

ETimes e_times(const Arrow& l) {
  if (!(l.cod() == N())) throw StructuralError("length map must land in N, got " + l.cod().to_string());
  const ObjExpr& A = l.dom();
  setmodel::Pullback pb = setmodel::pullback_obj(make_E().pi2E, l);
  ObjExpr NA = ObjExpr::prod({N(), A});
  Arrow guard = app(arith::monus(), {compose(arith::nno().succ, proj(NA, 0)), compose(l, proj(NA, 1))})
                    .relabel("s(m)-" + l.name());
  setmodel::Equalizer below =
      setmodel::equalizer_obj(guard, compose(arith::nno().zero, setmodel::terminal_map(NA)).relabel("0"));
  Arrow to = Arrow(pb.obj, below.obj, [](const Elem& e) { return Elem::tup({e.at(0).at(0), e.at(1)}); }, "iso_to");
  Arrow from = Arrow(
      below.obj, pb.obj, [l](const Elem& e) { return Elem::tup({Elem::tup({e.at(0), l(e.at(1))}), e.at(1)}); },
      "iso_from");
  return ETimes{pb, below, to, from};
}

Arrow id_times_f(const Arrow& f, const Arrow& l_A, const Arrow& l_B, const Budget& budget) {
  if (!(f.dom() == l_A.dom()) || !(f.cod() == l_B.dom()))
    throw StructuralError("Id x_N f needs f : " + l_A.dom().to_string() + " -> " + l_B.dom().to_string());
  auto tri = setmodel::arrows_equal(compose(l_B, f), l_A, budget);
  if (!tri.equal)
    throw ConstraintError("length maps do not commute with " + f.name(), render(*tri.counterexample, f.dom()));
  ObjExpr from = e_times(l_A).pullback.obj;
  ObjExpr to = e_times(l_B).pullback.obj;
  return Arrow(from, to, [f](const Elem& e) { return Elem::tup({e.at(0), f(e.at(1))}); }, "Id x_N " + f.name());
}

Arrow default_term(const ObjExpr& X) {
  const ListOps ops = list_ops(X);
  ObjExpr D = e_times(ops.len).below.obj;
  return Arrow(D, X, [](const Elem& e) { return listobj::decompose_nonempty(e.at(1)).first; }, "def");
}

Arrow nth_arrow(const ObjExpr& X) {
  const ListOps ops = list_ops(X);
  ETimes et = e_times(ops.len);
  const ObjExpr& D = et.below.obj;
  Arrow on_below = app(ops.nth_def, {default_term(X), proj(D, 0), proj(D, 1)});
  return compose(on_below, et.iso_to).relabel("nth");
}

void Instance::validate() const {
  if (!X.is(ObjExpr::Kind::fin) || !A.is(ObjExpr::Kind::fin))
    throw StructuralError("instance objects must be finite");
  if (lengths.size() != A.fin_size())
    throw StructuralError("instance has " + std::to_string(lengths.size()) + " lengths for " +
                          std::to_string(A.fin_size()) + " elements of A");
  if (g.size() != A.fin_size()) throw StructuralError("instance g has the wrong number of fibers");
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a].size() != lengths[a])
      throw StructuralError("g over " + A.names()[a] + " has " + std::to_string(g[a].size()) + " entries, expected " +
                            std::to_string(lengths[a]));
    for (auto x : g[a])
      if (x >= X.fin_size()) throw StructuralError("g value " + std::to_string(x) + " is not an element of X");
  }
}

Arrow Instance::l_arrow() const {
  auto ls = lengths;
  return Arrow(A, N(), [ls](const Elem& a) { return Elem::num(ls.at(a.as_u64())); }, render_lengths(lengths));
}

Arrow Instance::g_arrow() const {
  ObjExpr dom = e_times(l_arrow()).pullback.obj;
  auto table = g;
  return Arrow(
      dom, X,
      [table](const Elem& e) {
        const auto& fiber = table.at(e.at(1).as_u64());
        const std::uint64_t m = e.at(0).at(0).as_u64();
        if (m >= fiber.size()) throw StructuralError("g is undefined at " + e.to_string());
        return Elem::num(fiber[m]);
      },
      "g");
}

std::uint64_t Instance::max_length() const {
  return lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
}

Budget Instance::fit(Budget budget) const {
  budget.nat_max = std::max(budget.nat_max, max_length());
  budget.len_max = std::max(budget.len_max, max_length());
  return budget;
}

Arrow extend_to_total(const Instance& inst, const Budget& budget) {
  const Arrow l = inst.l_arrow();
  const ObjExpr pos = arith::split_by_zero(l).positive.obj;
  const ETimes et = e_times(l);
  ObjExpr dom = ObjExpr::prod({N(), pos});
  Arrow a = compose(setmodel::inclusion(pos, inst.A), proj(dom, 1));
  Arrow k = app(arith::id_until(), {proj(dom, 0), compose(l, a)});
  Arrow into_below = et.below.mediate(pairing({k, a}), budget);
  return setmodel::compose_all({inst.g_arrow(), et.iso_from, into_below}).relabel("g'");
}

Arrow construct_h(const Instance& inst, const Budget& budget) {
  inst.validate();
  const Budget b = inst.fit(budget);
  const ListOps ops = list_ops(inst.X);
  const Arrow l = inst.l_arrow();
  arith::ZeroSplit split = arith::split_by_zero(l);
  Arrow on_zero = constant(split.zero.obj, ops.kit.LX, empty_list());
  Arrow on_pos = listobj::list_build(extend_to_total(inst, b), restrict(l, split.positive.obj));
  Arrow h = setmodel::memoize(
      setmodel::case_merge(inst.A, {{split.zero.obj, on_zero}, {split.positive.obj, on_pos}}, b).relabel("h"));
  VerifyReport v = verify_solution(inst, h, b);
  if (!v.pass()) {
    std::string why;
    for (const auto& c : v.checks.laws)
      if (!c.pass) why += c.id + ": " + c.counterexample + "; ";
    throw DefectError("constructed h fails its own equations: " + why);
  }
  return h;
}

VerifyReport verify_solution(const Instance& inst, const Arrow& h, const Budget& budget) {
  inst.validate();
  const Budget b = inst.fit(budget);
  const ListOps ops = list_ops(inst.X);
  if (!(h.dom() == inst.A) || !(h.cod() == ops.kit.LX))
    throw StructuralError("candidate must be " + inst.A.to_string() + " -> " + ops.kit.LX.to_string() + ", got " +
                          h.dom().to_string() + " -> " + h.cod().to_string());
  const Arrow l = inst.l_arrow();
  VerifyReport rep{{}, b};
  LawResult len_eq = check_law("len-equation", compose(ops.len, h), l, b);
  rep.checks.add(len_eq);
  if (!len_eq.pass) {
    rep.checks.add(failed("nth-equation", "not checked: len . h != l"));
    return rep;
  }
  Arrow lifted = id_times_f(h, l, ops.len, b);
  rep.checks.add(check_law("nth-equation", inst.g_arrow(), compose(nth_arrow(inst.X), lifted), b));
  return rep;
}

BruteForce brute_force_solutions(const Instance& inst, const Budget& budget) {
  inst.validate();
  const Budget b = inst.fit(budget);
  const std::uint64_t k = inst.X.fin_size();
  const std::size_t na = inst.A.fin_size();

  BruteForce out;
  long double space = 1;
  for (auto len : inst.lengths)
    for (std::uint64_t i = 0; i < len; ++i) space *= static_cast<long double>(k);
  if (space > static_cast<long double>(b.card_cap))
    throw BudgetError("brute-force search space exceeds card_cap", size_string(space));
  out.candidates = static_cast<std::uint64_t>(space);

  // The two equations hold for h exactly when they hold at every a, so each
  // (a, h(a)) pair is checked once and reused across candidates.
  const Arrow nth = nth_arrow(inst.X);
  const Arrow g = inst.g_arrow();
  std::vector<std::vector<Elem>> values(na);
  std::vector<std::vector<char>> fits(na);
  for (std::size_t a = 0; a < na; ++a) {
    const std::uint64_t len = inst.lengths[a];
    values[a] = lists_of_length(k, len);
    for (const auto& list : values[a]) {
      bool ok = true;
      for (std::uint64_t m = 0; m < len && ok; ++m) {
        Elem pos = Elem::tup({Elem::num(m), Elem::num(len)});
        ok = nth(Elem::tup({pos, list})) == g(Elem::tup({pos, Elem::num(a)}));
      }
      fits[a].push_back(ok);
    }
  }
  if (out.candidates == 0) return out;

  const ObjExpr LX = ObjExpr::list_of(inst.X);
  std::vector<std::size_t> digits(na, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < na && ok; ++a) ok = fits[a][digits[a]];
    if (ok) {
      std::vector<std::pair<Elem, Elem>> table;
      for (std::size_t a = 0; a < na; ++a) table.emplace_back(Elem::num(a), values[a][digits[a]]);
      Arrow h = setmodel::from_table(inst.A, LX, std::move(table), "h" + std::to_string(out.solutions.size() + 1));
      if (!verify_solution(inst, h, b).pass()) throw DefectError("fiberwise check disagrees with verify_solution");
      out.solutions.push_back(std::move(h));
    }
    std::size_t pos = na;
    while (pos > 0 && ++digits[pos - 1] == values[pos - 1].size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

VerifyReport uniqueness_by_theory(const Instance& inst, const Arrow& h1, const Arrow& h2, const Budget& budget) {
  const Budget b = inst.fit(budget);
  for (auto [name, h] : {std::pair{"h1", &h1}, std::pair{"h2", &h2}}) {
    VerifyReport v = verify_solution(inst, *h, b);
    for (const auto& c : v.checks.laws)
      if (!c.pass) throw ConstraintError(std::string("premise fails: ") + name + " violates " + c.id, c.counterexample);
  }
  const ListOps ops = list_ops(inst.X);
  const ObjExpr& LX = ops.kit.LX;
  const Arrow l = inst.l_arrow();
  const ETimes et = e_times(l);
  const Arrow g = inst.g_arrow();
  VerifyReport rep{{}, b};

  // stage 1: nthDef(x, n, h1 a) = nthDef(x, n, h2 a), split by n < l(a)
  const ObjExpr D = ObjExpr::prod({inst.X, N(), inst.A});
  const Arrow x = proj(D, 0), n = proj(D, 1), a = proj(D, 2);
  const Arrow nd1 = app(ops.nth_def, {x, n, compose(h1, a)});
  const Arrow nd2 = app(ops.nth_def, {x, n, compose(h2, a)});
  {
    LawAccumulator acc("stage1.nthDef-agreement");
    arith::LtSplit sp = arith::split_by_lt(n, compose(l, a));
    const ObjExpr& lt = sp.lt.obj;
    const ObjExpr& geq = sp.geq.obj;
    Arrow g_lt = setmodel::compose_all({g, et.iso_from, et.below.mediate(restrict(pairing({n, a}), lt), b)});
    acc.merge(check_law("", restrict(nd1, lt), g_lt, b));
    acc.merge(check_law("", restrict(nd2, lt), g_lt, b));
    acc.merge(check_law("", restrict(nd1, geq), restrict(x, geq), b));
    acc.merge(check_law("", restrict(nd2, geq), restrict(x, geq), b));
    Arrow joined = setmodel::case_merge(D, {{lt, g_lt}, {geq, restrict(x, geq)}}, b);
    acc.merge(check_law("", nd1, joined, b));
    acc.merge(check_law("", nd2, joined, b));
    rep.checks.add(acc.result());
  }

  // stage 2: H_i(x, k, a) = H(x, k, h_i a) follow one recurrence, so they agree
  const Arrow H1 = app(ops.build_H, {x, n, compose(h1, a)});
  const Arrow H2 = app(ops.build_H, {x, n, compose(h2, a)});
  {
    LawAccumulator acc("stage2.parametrized-equality");
    const Arrow sk = compose(arith::nno().succ, n);
    const Arrow zero = constant(D, N(), Elem::num(0));
    const Arrow nil = constant(D, LX, empty_list());
    for (const auto* hi : {&h1, &h2}) {
      Arrow at = compose(*hi, a);
      acc.merge(check_law("", app(ops.build_H, {x, zero, at}), nil, b));
      acc.merge(check_law("", app(ops.build_H, {x, sk, at}),
                          app(ops.build_A, {x, n, at, app(ops.build_H, {x, n, at})}), b));
    }
    acc.merge(check_law("", app(ops.build_A, {x, n, compose(h1, a), H1}), app(ops.build_A, {x, n, compose(h2, a), H1}),
                        b));
    acc.merge(check_law("", H1, H2, b));
    const ObjExpr XA = ObjExpr::prod({inst.X, inst.A});
    const Arrow xa = proj(XA, 0), aa = proj(XA, 1);
    for (const auto* hi : {&h1, &h2})
      acc.merge(check_law("", compose(*hi, aa), app(ops.build_H, {xa, compose(l, aa), compose(*hi, aa)}), b));
    acc.merge(check_law("", compose(h1, aa), compose(h2, aa), b));
    rep.checks.add(acc.result());
  }

  // stage 3: split A by l = 0; on l > 0 the head of h1(a) is the default
  {
    LawAccumulator acc("stage3.final-equality");
    arith::ZeroSplit sp = arith::split_by_zero(l);
    const ObjExpr& A0 = sp.zero.obj;
    const ObjExpr& Apos = sp.positive.obj;
    Arrow nil0 = constant(A0, LX, empty_list());
    acc.merge(check_law("", restrict(h1, A0), nil0, b));
    acc.merge(check_law("", restrict(h2, A0), nil0, b));

    const ETimes el = e_times(ops.len);
    Arrow head_pos =
        el.below.mediate(pairing({constant(Apos, N(), Elem::num(0)), restrict(h1, Apos)}), b);
    Arrow def1 = compose(default_term(inst.X), head_pos);
    Arrow l_pos = restrict(l, Apos);
    for (const auto* hi : {&h1, &h2}) {
      Arrow hp = restrict(*hi, Apos);
      acc.merge(check_law("", hp, app(ops.build_H, {def1, l_pos, hp}), b));
    }
    Arrow merged = setmodel::case_merge(inst.A, {{A0, nil0}, {Apos, restrict(h1, Apos)}}, b);
    acc.merge(check_law("", merged, h2, b));
    acc.merge(check_law("", h1, h2, b));
    rep.checks.add(acc.result());
  }
  return rep;
}

LawResult check_nth_naturality(const ObjExpr& X, const ObjExpr& Y, std::size_t samples, const Budget& budget) {
  setmodel::LawRng rng(budget.seed);
  const ListOps ox = list_ops(X);
  const ListOps oy = list_ops(Y);
  const Arrow nx = nth_arrow(X);
  const Arrow ny = nth_arrow(Y);
  LawAccumulator acc("nth.naturality");
  for (std::size_t i = 0; i < samples && acc.ok(); ++i) {
    Arrow f = setmodel::random_fin_arrow(X, Y, rng);
    Arrow lifted = id_times_f(listobj::map_list(f), ox.len, oy.len, budget);
    acc.merge(check_law("", compose(ny, lifted), compose(f, nx), budget));
  }
  return acc.result();
}

}  // namespace polylist::polyadj
