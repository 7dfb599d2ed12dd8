#include "polylist/errors.hpp"
#include "polylist/listobj/laws.hpp"
#include "polylist/listobj/lists.hpp"
#include "polylist/setmodel/enumerate.hpp"
#include "polylist/setmodel/random.hpp"

#include <doctest.h>

using namespace polylist;
using namespace polylist::listobj;
using setmodel::Elem;

namespace {

const ObjExpr N = ObjExpr::nat();
const ObjExpr U = ObjExpr::unit();
const ObjExpr X = setmodel::letters(3);  // a b c

Elem n(std::uint64_t v) { return Elem::num(v); }
const Elem a = n(0), b = n(1), c = n(2);
Elem L(std::initializer_list<Elem> xs) { return Elem::seq(xs); }
Elem T(std::initializer_list<Elem> xs) { return Elem::tup(xs); }

Budget budget(std::uint64_t nat_max, std::uint64_t len_max) {
  Budget bb;
  bb.nat_max = nat_max;
  bb.len_max = len_max;
  return bb;
}

}  // namespace

TEST_CASE("list_rec with a counting step is len") {
  const ListKit kit = list_kit(X);
  const ObjExpr hdom = ObjExpr::prod({U, X, kit.LX, N});
  const Arrow g = arith::nno().zero;
  const Arrow h = setmodel::compose(arith::nno().succ, setmodel::proj(hdom, 3));
  const Arrow f = list_rec(g, h, "count");
  CHECK(f(T({Elem::star(), L({a, b, c})})) == n(3));
  CHECK(f(T({Elem::star(), L({})})) == n(0));
  CHECK(check_list_rec_equations("count", g, h, f, budget(4, 3)).pass);

  const ListKit one = list_kit(setmodel::letters(1));
  const ObjExpr hdom1 = ObjExpr::prod({U, one.X, one.LX, N});
  const Arrow h1 = setmodel::compose(arith::nno().succ, setmodel::proj(hdom1, 3));
  CHECK(count_list_rec_solutions(g, h1, budget(3, 2)) == 1);
}

TEST_CASE("list_rec on the empty list returns g") {
  const ListKit kit = list_kit(X);
  const ObjExpr hdom = ObjExpr::prod({N, X, kit.LX, N});
  const Arrow f = list_rec(arith::nno().succ, setmodel::proj(hdom, 0));
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(f(T({n(k), L({})})) == n(k + 1));
}

TEST_CASE("list_rec returning the rest acts like tr on singletons") {
  const ListKit kit = list_kit(X);
  const ObjExpr hdom = ObjExpr::prod({kit.LX, X, kit.LX, kit.LX});
  const Arrow f = list_rec(setmodel::identity(kit.LX), setmodel::proj(hdom, 2));
  CHECK(f(T({L({b}), L({a})})) == L({}));
  CHECK(f(T({L({b}), L({})})) == L({b}));
}

TEST_CASE("map_list") {
  const Arrow m = map_list(arith::nno().succ);
  CHECK(m(L({n(1), n(2)})) == L({n(2), n(3)}));
  CHECK(m(L({})) == L({}));
  CHECK(setmodel::arrows_equal(map_list(setmodel::identity(X)), setmodel::identity(ObjExpr::list_of(X)), budget(2, 3)));
}

TEST_CASE("basic list arrows") {
  const ListOps ops = list_ops(X);
  CHECK(ops.len(L({a, b, c})) == n(3));
  CHECK(ops.tr(L({a, b, c})) == L({b, c}));
  CHECK(ops.tr(L({})) == L({}));
  CHECK(ops.tail(T({n(2), L({a, b, c})})) == L({c}));
  CHECK(ops.tail(T({n(7), L({a, b})})) == L({}));
  CHECK(ops.zeroth_def(T({c, L({})})) == c);
  CHECK(ops.zeroth_def(T({c, L({b, a})})) == b);
}

TEST_CASE("nthDef") {
  const Arrow nth = list_ops(X).nth_def;
  CHECK(nth(T({a, n(1), L({a, b, c})})) == b);
  CHECK(nth(T({c, n(5), L({a, b})})) == c);
  CHECK(nth(T({b, n(0), L({})})) == b);
}

TEST_CASE("decompose_nonempty") {
  CHECK(decompose_nonempty(L({a, b})) == std::pair{a, L({b})});
  CHECK(decompose_nonempty(L({c})) == std::pair{c, L({})});
  CHECK_THROWS_AS(decompose_nonempty(L({})), ConstraintError);
}

TEST_CASE("concat and singleton") {
  const ListOps ops = list_ops(X);
  CHECK(ops.concat(T({L({a}), L({b, c})})) == L({a, b, c}));
  CHECK(ops.concat(T({L({}), L({c, a})})) == L({c, a}));
  CHECK(ops.singleton(a) == L({a}));
}

TEST_CASE("H and A") {
  const ListOps ops = list_ops(X);
  CHECK(ops.build_H(T({c, n(0), L({a, b})})) == L({}));
  CHECK(ops.build_H(T({c, n(2), L({a, b})})) == L({a, b}));
  CHECK(ops.build_H(T({c, n(1), L({a, b})})) == L({b}));
  CHECK(ops.build_A(T({c, n(3), L({a, b}), L({b})})) == L({b}));
  CHECK(ops.build_A(T({c, n(1), L({a, b}), L({b})})) == L({a, b}));
}

TEST_CASE("Seq and List") {
  const ObjExpr NU = ObjExpr::prod({N, U});
  const Arrow f = setmodel::proj(NU, 0).relabel("first");
  const Arrow three = setmodel::constant(U, N, n(3));
  CHECK(list_build(f, three)(Elem::star()) == L({n(0), n(1), n(2)}));
  CHECK(list_build(f, setmodel::constant(U, N, n(0)))(Elem::star()) == L({}));
  CHECK(seq_build(f)(T({n(1), n(2), Elem::star()})) == L({n(1), n(2)}));
  CHECK_THROWS_AS(seq_build(setmodel::identity(N)), StructuralError);
}

TEST_CASE("property: Seq agrees with direct construction") {
  const ObjExpr A = setmodel::letters(2);
  setmodel::LawRng rng(21);
  for (int i = 0; i < 10; ++i) {
    const Arrow f = setmodel::random_sequence_family(A, X, rng);
    const Arrow seq = seq_build(f);
    for (std::uint64_t m = 0; m < 4; ++m)
      for (std::uint64_t k = 0; k < 4; ++k)
        for (std::uint64_t ai = 0; ai < 2; ++ai)
          CHECK(seq(T({n(m), n(k), n(ai)})) == seq_direct(f, n(m), n(k), n(ai)));
  }
}

TEST_CASE("property: len of concat is the sum") {
  const ListOps ops = list_ops(setmodel::letters(2));
  const auto lists = setmodel::enumerate(ops.kit.LX, budget(4, 3)).elems;
  for (const auto& l1 : lists)
    for (const auto& l2 : lists)
      CHECK(ops.len(ops.concat(T({l1, l2}))).as_u64() == l1.size() + l2.size());
}

TEST_CASE("law suite passes for small alphabets") {
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto r = run_list_laws(budget(4, 3), k, {20, 8});
    CHECK_MESSAGE(r.all_pass(), "card_x = " << k);
    CHECK(r.laws.size() >= 40);
  }
}

TEST_CASE("tail missing one truncation is caught") {
  const ObjExpr Y = setmodel::letters(2);
  const ListOps ops = list_ops(Y);
  const Arrow bad(ops.tail.dom(), ops.tail.cod(), [ops](const Elem& e) {
    const auto k = e.at(0).as_u64();
    return ops.tail(Elem::tup({Elem::num(k > 0 ? k - 1 : 0), e.at(1)}));
  }, "tail-short");
  const auto r = run_list_laws(budget(4, 3), list_ops_with_tail(Y, bad), {20, 8});
  CHECK_FALSE(r.all_pass());
  const auto* lt = r.find("list.lenTail");
  REQUIRE(lt != nullptr);
  CHECK_FALSE(lt->pass);
  CHECK_FALSE(lt->counterexample.empty());
}
