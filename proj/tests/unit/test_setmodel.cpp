#include "polylist/arith/ops.hpp"
#include "polylist/errors.hpp"
#include "polylist/setmodel/category.hpp"
#include "polylist/setmodel/enumerate.hpp"
#include "polylist/setmodel/limits.hpp"
#include "polylist/setmodel/random.hpp"
#include "polylist/setmodel/report.hpp"

#include <doctest.h>

#include <set>

using namespace polylist;
using namespace polylist::setmodel;

namespace {

const ObjExpr N = ObjExpr::nat();

Elem n(std::uint64_t v) { return Elem::num(v); }
Elem pr(std::uint64_t a, std::uint64_t b) { return Elem::tup({n(a), n(b)}); }

Budget budget(std::uint64_t nat_max, std::uint64_t len_max = 3) {
  Budget b;
  b.nat_max = nat_max;
  b.len_max = len_max;
  return b;
}

// E = {(m, n) | s(m) - n = 0}
ObjExpr e_object() {
  const ObjExpr NN = ObjExpr::prod({N, N});
  Arrow guard(NN, N, [](const Elem& e) {
    const auto m = e.at(0).as_u64(), k = e.at(1).as_u64();
    return n(m + 1 > k ? m + 1 - k : 0);
  }, "s(m)-n");
  return ObjExpr::sub(NN, guard, constant(NN, N, n(0)).relabel("0"));
}

}  // namespace

TEST_CASE("enumeration order of N, lists and subobjects") {
  CHECK(enumerate(N, budget(3)).elems == std::vector<Elem>{n(0), n(1), n(2), n(3)});
  const auto units = enumerate(ObjExpr::list_of(ObjExpr::unit()), budget(3, 2)).elems;
  CHECK(units == std::vector<Elem>{Elem::seq({}), Elem::seq({Elem::star()}), Elem::seq({Elem::star(), Elem::star()})});
  CHECK(enumerate(e_object(), budget(2)).elems == std::vector<Elem>{pr(0, 1), pr(0, 2), pr(1, 2)});
}

TEST_CASE("enumeration respects card_cap and reports truncation") {
  Budget b = budget(100);
  b.card_cap = 10;
  const auto e = enumerate(N, b);
  CHECK(e.elems.size() == 10);
  CHECK(e.truncated);
}

TEST_CASE("products canonicalize") {
  CHECK(ObjExpr::prod({}) == ObjExpr::unit());
  CHECK(ObjExpr::prod({N}) == N);
  CHECK(ObjExpr::prod({N, N}).components().size() == 2);
  CHECK(enumerate(ObjExpr::prod({N, ObjExpr::unit()}), budget(1)).elems.size() == 2);
}

TEST_CASE("membership") {
  CHECK(elem_has_type(n(2), N));
  CHECK_FALSE(elem_has_type(pr(0, 0), e_object()));
  CHECK(elem_has_type(pr(0, 3), e_object()));
  CHECK_FALSE(elem_has_type(Elem::seq({Elem::star(), Elem::star()}), ObjExpr::list_of(N)));
  CHECK(elem_has_type(n(1), letters(2)));
  CHECK_FALSE(elem_has_type(n(2), letters(2)));
}

TEST_CASE("sub constructor rejects mismatched arrows") {
  const Arrow to_n = identity(N);
  const Arrow to_unit = terminal_map(N);
  CHECK_THROWS_AS(ObjExpr::sub(N, to_n, to_unit), StructuralError);
  CHECK_THROWS_AS(ObjExpr::sub(ObjExpr::prod({N, N}), to_n, to_n), StructuralError);
}

TEST_CASE("category core") {
  const Arrow s = arith::nno().succ;
  const Arrow P = arith::pred();
  const ObjExpr NN = ObjExpr::prod({N, N});
  CHECK(arrows_equal(compose(identity(N), s), s, budget(6)));
  CHECK(arrows_equal(compose(s, identity(N)), s, budget(6)));
  CHECK(pairing({proj(NN, 0), proj(NN, 1)})(pr(3, 5)) == pr(3, 5));
  CHECK(par({s, P})(pr(2, 2)) == pr(3, 1));
  CHECK(terminal_map(N)(n(7)) == Elem::star());
  CHECK_THROWS_AS(compose(s, terminal_map(N)), StructuralError);
}

TEST_CASE("arrows_equal reports the least counterexample") {
  const auto eq = arrows_equal(arith::nno().succ, arith::pred(), budget(4));
  CHECK_FALSE(eq.equal);
  REQUIRE(eq.counterexample);
  CHECK(*eq.counterexample == n(0));
  CHECK(arrows_equal(identity(N), identity(N), budget(4)).equal);
}

TEST_CASE("equalizer") {
  const ObjExpr NN = ObjExpr::prod({N, N});
  const ObjExpr E = e_object();
  const Equalizer eq = equalizer_obj(E.lhs(), E.rhs());
  CHECK(eq.obj == E);
  CHECK(enumerate(eq.obj, budget(2)).elems == enumerate(E, budget(2)).elems);

  const Arrow point = global(NN, pr(0, 1));
  const Arrow into = eq.mediate(point, budget(2));
  CHECK(into(Elem::star()) == pr(0, 1));
  CHECK(compose(eq.inclusion, into)(Elem::star()) == pr(0, 1));
  CHECK_THROWS_AS(eq.mediate(global(NN, pr(1, 1)), budget(2)), ConstraintError);

  const Equalizer same = equalizer_obj(identity(N), identity(N));
  CHECK(enumerate(same.obj, budget(5)).elems == enumerate(N, budget(5)).elems);
}

TEST_CASE("pullback") {
  const Arrow id = identity(N);
  const Pullback diag = pullback_obj(id, id);
  const auto elems = enumerate(diag.obj, budget(3)).elems;
  CHECK(elems.size() == 4);
  for (const auto& e : elems) CHECK(e.at(0) == e.at(1));

  const Arrow s = arith::nno().succ;
  CHECK_THROWS_AS(diag.mediate(id, s, budget(3)), ConstraintError);
  const Arrow m = diag.mediate(id, id, budget(3));
  CHECK(m(n(2)) == pr(2, 2));
}

TEST_CASE("case_merge") {
  const auto split = arith::split_by_zero(identity(N));
  const Arrow zero_branch = constant(split.zero.obj, N, n(10));
  const Arrow pos_branch = restrict(arith::pred(), split.positive.obj);
  const Arrow merged = case_merge(N, {{split.zero.obj, zero_branch}, {split.positive.obj, pos_branch}}, budget(5));
  CHECK(merged(n(0)) == n(10));
  CHECK(merged(n(4)) == n(3));

  const Arrow whole = case_merge(N, {{N, arith::pred()}}, budget(5));
  CHECK(arrows_equal(whole, arith::pred(), budget(5)));

  const ObjExpr all = equalizer_obj(identity(N), identity(N)).obj;
  CHECK_THROWS_AS(case_merge(N, {{all, restrict(identity(N), all)}, {N, identity(N)}}, budget(5)), CoverageError);
  CHECK_THROWS_AS(case_merge(N, {{split.zero.obj, zero_branch}}, budget(5)), CoverageError);
}

TEST_CASE("memoize is observationally invisible") {
  int calls = 0;
  Arrow f(N, N, [&calls](const Elem& e) {
    ++calls;
    return Elem::num(e.as_num() * 2);
  }, "double");
  const Arrow m = memoize(f);
  CHECK(m.label() == "double");
  CHECK(m(n(3)) == n(6));
  CHECK(m(n(3)) == n(6));
  CHECK(calls == 1);
}

TEST_CASE("rendering uses element names") {
  const ObjExpr X = letters(3);
  CHECK(render(Elem::seq({n(0), n(2)}), ObjExpr::list_of(X)) == "[a,c]");
  CHECK(render(Elem::tup({n(1), n(4)}), ObjExpr::prod({X, N})) == "(b,4)");
  CHECK(letters(28).names()[27] == "x27");
}

TEST_CASE("seeded generator is deterministic") {
  LawRng a(7), b(7), c(8);
  std::vector<std::uint64_t> xs, ys, zs;
  for (int i = 0; i < 5; ++i) {
    xs.push_back(a.next());
    ys.push_back(b.next());
    zs.push_back(c.next());
  }
  CHECK(xs == ys);
  CHECK(xs != zs);

  LawRng r1(3), r2(3);
  const ObjExpr X = letters(3), Y = letters(2);
  const Arrow f1 = random_fin_arrow(X, Y, r1), f2 = random_fin_arrow(X, Y, r2);
  CHECK(arrows_equal(f1, f2, budget(2)));
  for (const auto& x : enumerate(X, budget(2)).elems) CHECK(elem_has_type(f1(x), Y));
}

TEST_CASE("property: arrows land in their codomain") {
  const ObjExpr X = letters(2);
  LawRng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Arrow f = random_sequence_family(X, X, rng);
    const Arrow p = random_length_map(X, 3, rng);
    for (const auto& e : enumerate(f.dom(), budget(4)).elems) CHECK(elem_has_type(f(e), X));
    for (const auto& e : enumerate(X, budget(4)).elems) CHECK(p(e).as_u64() <= 3);
  }
}

TEST_CASE("report helpers") {
  const auto r = check_law("succ-vs-pred", arith::nno().succ, arith::pred(), budget(3));
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.find('0') != std::string::npos);
  LawReport rep;
  rep.add(r);
  rep.add(check_law("id", identity(N), identity(N), budget(3)));
  CHECK(rep.failures() == 1);
  CHECK(rep.find("id")->pass);
  std::ostringstream os;
  rep.print(os);
  CHECK(os.str().rfind("succ-vs-pred FAIL", 0) == 0);
  CHECK(os.str().find("\nid PASS\n") != std::string::npos);
}
