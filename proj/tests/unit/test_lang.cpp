#include "polylist/errors.hpp"
#include "polylist/lang/parse.hpp"
#include "polylist/listobj/lists.hpp"
#include "polylist/polyadj/adjoint.hpp"
#include "polylist/setmodel/enumerate.hpp"
#include "polylist/setmodel/random.hpp"

#include <doctest.h>

using namespace polylist;
using namespace polylist::lang;

namespace {

const ObjExpr N = ObjExpr::nat();

Elem n(std::uint64_t v) { return Elem::num(v); }

Scope abc() {
  Scope s;
  s.sets.push_back({"X", parse_set("{a, b, c}")});
  return s;
}

Elem eval_closed(const std::string& text, const Scope& scope = abc()) {
  const Arrow f = interpret(parse_term(text), Context(scope));
  return f(Elem::star());
}

Term num(std::uint64_t k) {
  Term t = Term::app("0", {});
  while (k-- > 0) t = Term::app("s", {t});
  return t;
}

// Random term over a small vocabulary; never produces a one-element tuple.
Term random_term(setmodel::LawRng& rng, int depth) {
  const std::uint64_t pick = depth <= 0 ? rng.below(3) : rng.below(9);
  static const char* vars[] = {"x", "y", "l", "nil", "a"};
  static const char* fns[] = {"add", "f", "concat", "g"};
  switch (pick) {
    case 0:
      return Term::var(vars[rng.below(5)]);
    case 1:
      return num(rng.below(4));
    case 2:
      return Term::app("nil", {});
    case 3:
    case 4: {
      std::vector<Term> args;
      const std::uint64_t k = rng.below(3);
      for (std::uint64_t i = 0; i < k; ++i) args.push_back(random_term(rng, depth - 1));
      return Term::app(fns[rng.below(4)], std::move(args));
    }
    case 5:
      return Term::app("cons", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 6:
      return Term::app("s", {random_term(rng, depth - 1)});
    case 7: {
      std::vector<Term> items;
      const std::uint64_t k = rng.below(2) == 0 ? 0 : 2 + rng.below(2);
      for (std::uint64_t i = 0; i < k; ++i) items.push_back(random_term(rng, depth - 1));
      return Term::tuple(std::move(items));
    }
    default:
      return Term::app("len", {random_term(rng, depth - 1)});
  }
}

}  // namespace

TEST_CASE("parsing and desugaring") {
  CHECK(parse_term("monus(3, 5)") == Term::app("monus", {num(3), num(5)}));
  CHECK(parse_term("[1,2]") == Term::app("cons", {num(1), Term::app("cons", {num(2), Term::app("nil", {})})}));
  CHECK(parse_term("x :: y :: l") == Term::app("cons", {Term::var("x"), Term::app("cons", {Term::var("y"), Term::var("l")})}));
  CHECK(parse_term("(x, y)") == Term::tuple({Term::var("x"), Term::var("y")}));
  CHECK(parse_term("(x)") == Term::var("x"));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_term("x :: ");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  try {
    parse_term("add(1,\n  ?)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_term("f(x"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x y"), SyntaxError);
  CHECK_THROWS_AS(parse_set("{a, a}"), SyntaxError);
  CHECK_THROWS_AS(parse_context("x:Q"), SyntaxError);
  CHECK_THROWS_AS(parse_context("x:N, x:N"), SyntaxError);
}

TEST_CASE("printing re-sugars numerals and list literals") {
  CHECK(parse_term("s(s(0))").to_string() == "2");
  CHECK(parse_term("cons(a, cons(b, nil()))").to_string() == "[a, b]");
  CHECK(parse_term("x :: l").to_string() == "cons(x, l)");
  CHECK(parse_term("s(x)").to_string() == "s(x)");
}

TEST_CASE("property: parse . print is the identity on terms") {
  setmodel::LawRng rng(99);
  for (int i = 0; i < 300; ++i) {
    const Term t = random_term(rng, 4);
    CHECK_MESSAGE(parse_term(t.to_string()) == t, t.to_string());
  }
}

TEST_CASE("types and contexts") {
  const Scope s = abc();
  CHECK(parse_type("N*L(X)", s) == ObjExpr::prod({N, ObjExpr::list_of(s.sets[0].second)}));
  CHECK(parse_type("1", s) == ObjExpr::unit());
  const Context C = parse_context("m:N, n:N | m < n", s);
  CHECK(C.vars().size() == 2);
  CHECK(C.constraints().size() == 1);
  CHECK(C.carrier().is(ObjExpr::Kind::sub));
  CHECK(C.carrier() == parse_context("m:N, n:N | m < n", s).carrier());
  Budget b;
  b.nat_max = 2;
  CHECK(setmodel::enumerate(C.carrier(), b).elems.size() == 3);
  CHECK(parse_context("").vars().empty());
}

TEST_CASE("typecheck") {
  const Context C = parse_context("x:N, y:N");
  CHECK(typecheck(parse_term("x"), C) == N);
  CHECK(typecheck(parse_term("add(x, s(y))"), C) == N);
  CHECK(typecheck(parse_term("[x, y]"), C) == ObjExpr::list_of(N));
  CHECK(typecheck(parse_term("add((x, y))"), C) == N);
  CHECK_THROWS_AS(typecheck(parse_term("cons(x, x)"), C), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("add(x)"), C), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("frob(x)"), C), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("z"), C), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("[]"), C), TypeError);
  CHECK(typecheck(parse_term("[]"), C, ObjExpr::list_of(N)) == ObjExpr::list_of(N));
  CHECK(typecheck(parse_term("cons(x, [])"), C) == ObjExpr::list_of(N));
  try {
    typecheck(parse_term("cons(x, x)"), C);
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("L(N)") != std::string::npos);
  }
}

TEST_CASE("interpretation") {
  const Context C = parse_context("x1:N, x2:N");
  const Arrow p = interpret(parse_term("x2"), C);
  CHECK(setmodel::arrows_equal(p, setmodel::proj(ObjExpr::prod({N, N}), 1), Budget{}));

  CHECK(eval_closed("monus(3, 5)") == n(0));
  CHECK(eval_closed("idUntil(7, 3)") == n(2));
  CHECK(eval_closed("nthDef(a, 1, [a, b, c])") == n(1));
  CHECK(eval_closed("concat([a], [b, c])") == Elem::seq({n(0), n(1), n(2)}));
  CHECK(eval_closed("tail(2, [a, b, c])") == Elem::seq({n(2)}));
  CHECK(eval_closed("ite(a, b, 0)") == n(0));
  CHECK_THROWS_AS(eval_closed("len([])", Scope{}), TypeError);
  CHECK(eval_closed("len([1])", Scope{}) == n(1));
}

TEST_CASE("composition of arrow calls") {
  const Arrow s = arith::nno().succ;
  const Arrow P = arith::pred();
  const Context C = parse_context("x:N");
  const Term t = Term::app(s, {Term::app(P, {Term::var("x")})});
  CHECK(setmodel::arrows_equal(interpret(t, C), setmodel::compose(s, P), Budget{}));
}

TEST_CASE("arrow call on a constrained context") {
  const auto& e = polyadj::make_E();
  const Context C = parse_context("m:N, n:N | m < n");
  const Term t = Term::app(e.pi2E, {Term::tuple({Term::var("m"), Term::var("n")})});
  const Arrow f = interpret(t, C);
  CHECK(f(Elem::tup({n(1), n(3)})) == n(3));
  const Arrow loose = interpret(t, parse_context("m:N, n:N"));
  CHECK_THROWS_AS(loose(Elem::tup({n(3), n(1)})), ConstraintError);
}

TEST_CASE("terms_equal uses the constraints") {
  const Context C = parse_context("m:N, n:N | m < n");
  Budget b;
  b.nat_max = 5;
  CHECK(terms_equal(parse_term("idUntil(m, n)"), parse_term("m"), C, b).equal);
  CHECK_FALSE(terms_equal(parse_term("idUntil(m, n)"), parse_term("m"), parse_context("m:N, n:N"), b).equal);
}

TEST_CASE("substitution") {
  Budget b;
  const Context src = parse_context("y:N");
  CHECK(substitute(parse_term("y"), {{"y", parse_term("0")}}, src, Context{}, b) == num(0));

  const Scope s = abc();
  const Context lists = parse_context("x:X, l:L(X)", s);
  const ObjExpr X = s.sets[0].second;
  const Arrow h1 = setmodel::constant(X, ObjExpr::list_of(X), Elem::seq({n(2)})).relabel("h1");
  Context tgt(s);
  tgt.bind("a", X).bind("d", X);
  const Term img = Term::app(h1, {Term::var("a")});
  const Term out = substitute(parse_term("x :: l"), {{"l", img}, {"x", Term::var("d")}}, lists, tgt, b);
  CHECK(out == Term::app("cons", {Term::var("d"), img}));

  const Context lt = parse_context("m:N, n:N | m < n");
  try {
    substitute(parse_term("m"), {{"m", parse_term("5")}, {"n", parse_term("2")}}, lt, Context{}, b);
    FAIL("expected a constraint error");
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
  CHECK_THROWS_AS(substitute(parse_term("m"), {{"m", parse_term("1")}}, lt, Context{}, b), TypeError);
  CHECK_THROWS_AS(substitute(parse_term("y"), {{"y", parse_term("[]")}}, src, Context{}, b), TypeError);
}

TEST_CASE("interpreted substitution is a map between carriers") {
  Budget b;
  const Context src = parse_context("u:N, v:N");
  const Context tgt = parse_context("x:N");
  const Subst sigma{{"u", parse_term("s(x)")}, {"v", parse_term("x")}};
  const Arrow m = interpret_subst(sigma, src, tgt);
  const Term t = parse_term("monus(u, v)");
  const Arrow lhs = interpret(substitute(t, sigma, src, tgt, b), tgt);
  const Arrow rhs = setmodel::compose(interpret(t, src), m);
  CHECK(setmodel::arrows_equal(lhs, rhs, b));
  CHECK(lhs(n(3)) == n(1));
}

TEST_CASE("free variables") {
  const Context C = parse_context("x:N, y:N");
  CHECK(free_vars(parse_term("add(y, add(x, y))"), C) == std::vector<std::string>{"y", "x"});
  CHECK(free_vars(parse_term("3"), C).empty());
}
