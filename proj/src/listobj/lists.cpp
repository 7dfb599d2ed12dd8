#include "polylist/listobj/lists.hpp"

#include "polylist/errors.hpp"

#include <map>
#include <mutex>

namespace polylist::listobj {

using arith::nno;
using setmodel::compose;
using setmodel::compose_all;
using setmodel::enumerate;
using setmodel::Enumeration;
using setmodel::identity;
using setmodel::pairing;
using setmodel::proj;
using setmodel::terminal_map;

namespace {

ObjExpr N() { return ObjExpr::nat(); }

// f . <!, id> for f out of 1*D
Arrow drop_unit(const Arrow& f, const ObjExpr& D, std::string label) {
  return compose(f, pairing({terminal_map(D), identity(D)})).relabel(std::move(label));
}

Arrow build_tail(const ListKit& k, const Arrow& tr) {
  // f(l, 0) = l, f(l, sn) = tr(f(l, n)); tail = f . <pi2, pi1>
  ObjExpr step = ObjExpr::prod({k.LX, N(), k.LX});
  Arrow f = arith::nno_rec(identity(k.LX), compose(tr, proj(step, 2)));
  ObjExpr dom = ObjExpr::prod({N(), k.LX});
  return compose(f, pairing({proj(dom, 1), proj(dom, 0)})).relabel("tail");
}

// nthDef, H and A from the primitive arrows
ListOps assemble(ListKit k, Arrow len, Arrow tr, Arrow tail, Arrow zeroth_def, Arrow concat, Arrow singleton) {
  const auto& ar = arith::standard_arith();
  ObjExpr xnl = ObjExpr::prod({k.X, N(), k.LX});
  Arrow nth_def =
      compose(zeroth_def, pairing({proj(xnl, 0), compose(tail, pairing({proj(xnl, 1), proj(xnl, 2)}))}))
          .relabel("nthDef");
  Arrow gap = compose(ar.monus, pairing({compose(len, proj(xnl, 2)), proj(xnl, 1)}));
  Arrow H = compose(tail, pairing({gap, proj(xnl, 2)})).relabel("H");

  ObjExpr d = ObjExpr::prod({k.X, N(), k.LX, k.LX});
  Arrow len_l = compose(len, proj(d, 2));
  Arrow gap4 = compose(ar.monus, pairing({len_l, proj(d, 1)}));
  Arrow entry = compose(nth_def, pairing({proj(d, 0), compose(ar.pred, gap4), proj(d, 2)}));
  Arrow grown = compose(k.cons, pairing({entry, proj(d, 3)}));
  Arrow A = compose(arith::ite_leq(k.LX), pairing({proj(d, 3), grown, len_l, proj(d, 1)})).relabel("A");
  return ListOps{std::move(k), std::move(len), std::move(tr), std::move(tail), std::move(zeroth_def),
                 std::move(nth_def), std::move(concat), std::move(singleton), std::move(H), std::move(A)};
}

std::string show(const Elem& e, const ObjExpr& o) { return setmodel::render(e, o); }

}  // namespace

ListKit list_kit(const ObjExpr& X) {
  ObjExpr LX = ObjExpr::list_of(X);
  Arrow nil(ObjExpr::unit(), LX, [](const Elem&) { return Elem::seq(std::vector<Elem>{}); }, "nil");
  Arrow cons(ObjExpr::prod({X, LX}), LX,
             [](const Elem& xl) {
               std::vector<Elem> items;
               items.reserve(xl.at(1).size() + 1);
               items.push_back(xl.at(0));
               for (const auto& e : xl.at(1).items()) items.push_back(e);
               return Elem::seq(std::move(items));
             },
             "cons");
  return ListKit{X, LX, nil, cons};
}

Arrow list_rec(const Arrow& g, const Arrow& h, std::string label) {
  const ObjExpr& A = g.dom();
  const ObjExpr& B = g.cod();
  if (!h.dom().is(ObjExpr::Kind::prod) || h.dom().components().size() != 4)
    throw StructuralError("list recursion step must have domain A*X*L(X)*B, got " + h.dom().to_string());
  const ObjExpr X = h.dom().components()[1];
  const ObjExpr LX = ObjExpr::list_of(X);
  ObjExpr expected = ObjExpr::prod({A, X, LX, B});
  if (!(h.dom() == expected))
    throw StructuralError("list recursion step must have domain " + expected.to_string() + ", got " +
                          h.dom().to_string());
  if (!(h.cod() == B))
    throw StructuralError("list recursion step must land in " + B.to_string() + ", got " + h.cod().to_string());
  auto fn = [g, h](const Elem& al) {
    const Elem& a = al.at(0);
    const auto& items = al.at(1).items();
    Elem b = g(a);
    for (std::size_t i = items.size(); i-- > 0;) {
      Elem rest = Elem::seq(std::vector<Elem>(items.begin() + static_cast<std::ptrdiff_t>(i) + 1, items.end()));
      b = h(Elem::tup({a, items[i], std::move(rest), std::move(b)}));
    }
    return b;
  };
  return Arrow(ObjExpr::prod({A, LX}), B, std::move(fn), std::move(label));
}

setmodel::LawResult check_list_rec_equations(std::string id, const Arrow& g, const Arrow& h, const Arrow& f,
                                             const Budget& budget) {
  setmodel::LawAccumulator acc(std::move(id));
  const ObjExpr& A = g.dom();
  const ObjExpr X = h.dom().components()[1];
  const ObjExpr LX = ObjExpr::list_of(X);
  const Elem empty = Elem::seq(std::vector<Elem>{});
  Enumeration as = enumerate(A, budget);
  Enumeration ls = enumerate(LX, budget);
  Enumeration xs = enumerate(X, budget);
  for (const auto& a : as.elems) {
    acc.count();
    if (!(f(Elem::tup({a, empty})) == g(a))) {
      acc.fail("f(" + show(a, A) + ",[]) != g(" + show(a, A) + ")");
      return acc.result();
    }
    for (const auto& l : ls.elems) {
      if (l.size() >= budget.len_max) continue;
      for (const auto& x : xs.elems) {
        acc.count();
        std::vector<Elem> items{x};
        items.insert(items.end(), l.items().begin(), l.items().end());
        Elem lhs = f(Elem::tup({a, Elem::seq(std::move(items))}));
        Elem rhs = h(Elem::tup({a, x, l, f(Elem::tup({a, l}))}));
        if (!(lhs == rhs)) {
          acc.fail("f(" + show(a, A) + "," + show(x, X) + "::" + show(l, LX) + ") = " + show(lhs, g.cod()) +
                   " != " + show(rhs, g.cod()));
          return acc.result();
        }
      }
    }
  }
  return acc.result();
}

std::uint64_t count_list_rec_solutions(const Arrow& g, const Arrow& h, const Budget& budget) {
  const ObjExpr X = h.dom().components()[1];
  const ObjExpr LX = ObjExpr::list_of(X);
  Enumeration as = enumerate(g.dom(), budget);
  Enumeration bs = enumerate(g.cod(), budget);
  Enumeration ls = enumerate(LX, budget);
  if (as.truncated || bs.truncated || ls.truncated)
    throw BudgetError("list recursor hom-set carriers exceed card_cap", "?");
  const std::size_t width = ls.elems.size();
  const std::size_t cells = as.elems.size() * width;
  const std::size_t nb = bs.elems.size();
  long double space = 1;
  for (std::size_t i = 0; i < cells; ++i) space *= static_cast<long double>(nb);
  if (space > static_cast<long double>(budget.card_cap))
    throw BudgetError("list recursor hom-set too large to enumerate", size_string(space));
  if (cells > 0 && nb == 0) return 0;

  std::map<Elem, std::size_t> index;
  for (std::size_t i = 0; i < width; ++i) index.emplace(ls.elems[i], i);
  // every non-empty list at position i is cons of (head, rest at position rest_of[i])
  std::vector<std::size_t> rest_of(width, 0);
  for (std::size_t i = 0; i < width; ++i) {
    const auto& items = ls.elems[i].items();
    if (items.empty()) continue;
    rest_of[i] = index.at(Elem::seq(std::vector<Elem>(items.begin() + 1, items.end())));
  }

  std::vector<std::size_t> digits(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t ai = 0; ai < as.elems.size() && ok; ++ai) {
      const Elem& a = as.elems[ai];
      for (std::size_t li = 0; li < width && ok; ++li) {
        const Elem& got = bs.elems[digits[ai * width + li]];
        const auto& items = ls.elems[li].items();
        if (items.empty()) {
          ok = got == g(a);
        } else {
          const std::size_t ri = rest_of[li];
          ok = got == h(Elem::tup({a, items[0], ls.elems[ri], bs.elems[digits[ai * width + ri]]}));
        }
      }
    }
    if (ok) ++count;
    std::size_t pos = cells;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < nb) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  return count;
}

Arrow map_list(const Arrow& f) {
  ListKit kx = list_kit(f.dom());
  ListKit ky = list_kit(f.cod());
  ObjExpr step = ObjExpr::prod({ObjExpr::unit(), kx.X, kx.LX, ky.LX});
  Arrow h = compose(ky.cons, pairing({compose(f, proj(step, 1)), proj(step, 3)}));
  Arrow rec = list_rec(ky.nil, h);
  return drop_unit(rec, kx.LX, "L(" + f.name() + ")");
}

static ListOps build_list_ops(const ObjExpr& X) {
  const ListKit k = list_kit(X);
  const ObjExpr U = ObjExpr::unit();
  ObjExpr len_step = ObjExpr::prod({U, X, k.LX, N()});
  Arrow len = drop_unit(list_rec(nno().zero, compose(nno().succ, proj(len_step, 3))), k.LX, "len");
  ObjExpr tr_step = ObjExpr::prod({U, X, k.LX, k.LX});
  Arrow tr = drop_unit(list_rec(k.nil, proj(tr_step, 2)), k.LX, "tr");
  Arrow tail = build_tail(k, tr);
  ObjExpr zd_step = ObjExpr::prod({X, X, k.LX, X});
  Arrow zeroth_def = list_rec(identity(X), proj(zd_step, 1), "zerothDef");
  // f(l2, []) = l2, f(l2, x::l1) = x :: f(l2, l1); concat = f . <pi2, pi1>
  ObjExpr cat_step = ObjExpr::prod({k.LX, X, k.LX, k.LX});
  Arrow cat = list_rec(identity(k.LX), compose(k.cons, pairing({proj(cat_step, 1), proj(cat_step, 3)})));
  ObjExpr LL = ObjExpr::prod({k.LX, k.LX});
  Arrow concat = compose(cat, pairing({proj(LL, 1), proj(LL, 0)})).relabel("concat");
  Arrow singleton = compose(k.cons, pairing({identity(X), compose(k.nil, terminal_map(X))})).relabel("singleton");
  return assemble(k, len, tr, tail, zeroth_def, concat, singleton);
}

ListOps list_ops(const ObjExpr& X) {
  // arrows are immutable, so one build per object is shared by every caller
  static std::mutex mu;
  static std::map<std::string, std::vector<std::pair<ObjExpr, ListOps>>> cache;
  const std::string key = X.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [obj, ops] : cache[key])
      if (obj == X) return ops;
  }
  ListOps ops = build_list_ops(X);
  std::lock_guard<std::mutex> lock(mu);
  cache[key].emplace_back(X, ops);
  return ops;
}

ListOps list_ops_with_tail(const ObjExpr& X, const Arrow& tail) {
  ListOps ops = list_ops(X);
  ObjExpr dom = ObjExpr::prod({N(), ops.kit.LX});
  if (!(tail.dom() == dom) || !(tail.cod() == ops.kit.LX))
    throw StructuralError("tail must be " + dom.to_string() + " -> " + ops.kit.LX.to_string() + ", got " +
                          tail.dom().to_string() + " -> " + tail.cod().to_string());
  return assemble(ops.kit, ops.len, ops.tr, tail, ops.zeroth_def, ops.concat, ops.singleton);
}

std::pair<Elem, Elem> decompose_nonempty(const Elem& list) {
  const auto& items = list.items();
  if (items.empty()) throw ConstraintError("cannot decompose the empty list", "[]");
  return {items.front(), Elem::seq(std::vector<Elem>(items.begin() + 1, items.end()))};
}

Arrow seq_build(const Arrow& f) {
  const ObjExpr& fd = f.dom();
  if (!fd.is(ObjExpr::Kind::prod) || fd.components().size() != 2 || !(fd.components()[0] == N()))
    throw StructuralError("sequence family must have domain N*A, got " + fd.to_string());
  const ObjExpr A = fd.components()[1];
  const ListOps ops = list_ops(f.cod());
  const ObjExpr& LX = ops.kit.LX;
  // parameter (m, a); f'((m,a), 0) = [], f'((m,a), sn) = f'((m,a), n) ++ [f(m+n, a)]
  ObjExpr param = ObjExpr::prod({N(), A});
  ObjExpr step = ObjExpr::prod({param, N(), LX});
  Arrow m = compose(proj(param, 0), proj(step, 0));
  Arrow a = compose(proj(param, 1), proj(step, 0));
  Arrow at = compose(arith::add(), pairing({m, proj(step, 1)}));
  Arrow last = compose(ops.singleton, compose(f, pairing({at, a})));
  Arrow h = compose(ops.concat, pairing({proj(step, 2), last}));
  Arrow rec = arith::nno_rec(compose(ops.kit.nil, terminal_map(param)), h);
  ObjExpr dom = ObjExpr::prod({N(), N(), A});
  return compose(rec, pairing({pairing({proj(dom, 0), proj(dom, 2)}), proj(dom, 1)}))
      .relabel("Seq[" + f.name() + "]");
}

Arrow list_build(const Arrow& f, const Arrow& p) {
  if (!(p.cod() == N())) throw StructuralError("length map must land in N, got " + p.cod().to_string());
  const ObjExpr& A = p.dom();
  Arrow seq = seq_build(f);
  if (!(seq.dom().components()[2] == A))
    throw StructuralError("length map domain " + A.to_string() + " does not match sequence family index " +
                          seq.dom().components()[2].to_string());
  return compose(seq, pairing({compose(nno().zero, terminal_map(A)), p, identity(A)}))
      .relabel("List[" + f.name() + "," + p.name() + "]");
}

Elem seq_direct(const Arrow& f, const Elem& m, const Elem& n, const Elem& a) {
  std::vector<Elem> items;
  const std::uint64_t count = n.as_u64();
  for (std::uint64_t i = 0; i < count; ++i) items.push_back(f(Elem::tup({Elem::num(m.as_num() + i), a})));
  return Elem::seq(std::move(items));
}

}  // namespace polylist::listobj
