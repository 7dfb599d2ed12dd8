#include "polylist/errors.hpp"
#include "polylist/listobj/lists.hpp"
#include "polylist/polyadj/adjoint.hpp"
#include "polylist/polyadj/slice.hpp"
#include "polylist/setmodel/enumerate.hpp"

#include <doctest.h>

using namespace polylist;
using namespace polylist::polyadj;
using setmodel::Elem;

namespace {

const ObjExpr N = ObjExpr::nat();

Elem n(std::uint64_t v) { return Elem::num(v); }
Elem pr(std::uint64_t a, std::uint64_t b) { return Elem::tup({n(a), n(b)}); }
Elem L(std::initializer_list<Elem> xs) { return Elem::seq(xs); }

Budget budget(std::uint64_t nat_max, std::uint64_t len_max = 3) {
  Budget b;
  b.nat_max = nat_max;
  b.len_max = len_max;
  return b;
}

// X = {a,b}; A = {p,q,r}; l = 2,0,1; g(0,p)=a, g(1,p)=b, g(0,r)=a
Instance sample() {
  return Instance{setmodel::letters(2), ObjExpr::fin({"p", "q", "r"}), {2, 0, 1}, {{0, 1}, {}, {0}}};
}

Arrow table(const Instance& inst, std::vector<Elem> rows) {
  std::vector<std::pair<Elem, Elem>> t;
  for (std::size_t i = 0; i < rows.size(); ++i) t.emplace_back(n(i), rows[i]);
  return setmodel::from_table(inst.A, ObjExpr::list_of(inst.X), std::move(t), "h?");
}

}  // namespace

TEST_CASE("the object E") {
  const auto& e = make_E();
  CHECK(setmodel::enumerate(e.E, budget(2)).elems == std::vector<Elem>{pr(0, 1), pr(0, 2), pr(1, 2)});
  CHECK(e.pi2E(pr(0, 2)) == n(2));
  const auto all = setmodel::enumerate(e.E, budget(5)).elems;
  for (std::uint64_t k = 0; k <= 5; ++k)
    CHECK(std::count_if(all.begin(), all.end(), [&](const Elem& x) { return x.at(1) == n(k); }) == long(k));
}

TEST_CASE("E times A") {
  const Instance inst = sample();
  const ETimes et = e_times(inst.l_arrow());
  const auto elems = setmodel::enumerate(et.pullback.obj, inst.fit(Budget{})).elems;
  std::vector<Elem> over_p;
  for (const auto& x : elems)
    if (x.at(1) == n(0)) over_p.push_back(x);
  CHECK(over_p == std::vector<Elem>{Elem::tup({pr(0, 2), n(0)}), Elem::tup({pr(1, 2), n(0)})});
  CHECK(elems.size() == 3);
  for (const auto& x : elems) CHECK(et.iso_from(et.iso_to(x)) == x);
  for (const auto& y : setmodel::enumerate(et.below.obj, inst.fit(Budget{})).elems) CHECK(et.iso_to(et.iso_from(y)) == y);

  const Arrow zero = setmodel::constant(inst.A, N, n(0));
  CHECK(setmodel::enumerate(e_times(zero).pullback.obj, budget(4)).elems.empty());
}

TEST_CASE("pullback of pi2E and len contains ((1,2),[a,b])") {
  const auto& e = make_E();
  const auto ops = listobj::list_ops(setmodel::letters(2));
  const auto pb = setmodel::pullback_obj(e.pi2E, ops.len);
  CHECK(setmodel::elem_has_type(Elem::tup({pr(1, 2), L({n(0), n(1)})}), pb.obj));
  CHECK_FALSE(setmodel::elem_has_type(Elem::tup({pr(1, 2), L({n(0)})}), pb.obj));
}

TEST_CASE("Id x_N f") {
  const Instance inst = sample();
  const Budget b = inst.fit(Budget{});
  const Arrow l = inst.l_arrow();
  const Arrow id = id_times_f(setmodel::identity(inst.A), l, l, b);
  for (const auto& x : setmodel::enumerate(id.dom(), b).elems) CHECK(id(x) == x);

  const Arrow h = construct_h(inst, b);
  const auto ops = listobj::list_ops(inst.X);
  const Arrow idh = id_times_f(h, l, ops.len, b);
  CHECK(idh(Elem::tup({pr(1, 2), n(0)})) == Elem::tup({pr(1, 2), L({n(0), n(1)})}));

  const Arrow wrong = setmodel::constant(inst.A, ObjExpr::list_of(inst.X), L({}));
  CHECK_THROWS_AS(id_times_f(wrong, l, ops.len, b), ConstraintError);
}

TEST_CASE("default term and nth") {
  const ObjExpr X = setmodel::letters(3);
  const Arrow def = default_term(X);
  CHECK(def(Elem::tup({n(0), L({n(0), n(1)})})) == n(0));
  CHECK(def(Elem::tup({n(1), L({n(1), n(0)})})) == n(1));
  CHECK(setmodel::enumerate(def.dom(), budget(3, 0)).elems.empty());

  const Arrow nth = nth_arrow(X);
  CHECK(nth(Elem::tup({pr(1, 3), L({n(0), n(1), n(2)})})) == n(1));
  CHECK(nth(Elem::tup({pr(0, 1), L({n(2)})})) == n(2));
  CHECK(check_nth_naturality(X, setmodel::letters(2), 30, budget(3)).pass);
}

TEST_CASE("extension of g to all of N") {
  const Instance inst = sample();
  const Arrow gp = extend_to_total(inst, inst.fit(Budget{}));
  CHECK(gp(Elem::tup({n(5), n(0)})) == n(1));
  CHECK(gp(Elem::tup({n(0), n(0)})) == n(0));
  CHECK(gp(Elem::tup({n(1), n(0)})) == n(1));
  for (std::uint64_t m = 0; m < 6; ++m) CHECK(gp(Elem::tup({n(m), n(2)})) == n(0));
}

TEST_CASE("construct_h on the sample instance") {
  const Instance inst = sample();
  const Budget b = inst.fit(Budget{});
  const Arrow h = construct_h(inst, b);
  CHECK(h(n(0)) == L({n(0), n(1)}));
  CHECK(h(n(1)) == L({}));
  CHECK(h(n(2)) == L({n(0)}));
  CHECK(verify_solution(inst, h, b).pass());
}

TEST_CASE("verify_solution rejects perturbed arrows") {
  const Instance inst = sample();
  const Budget b = inst.fit(Budget{});
  const auto wrong_entry = verify_solution(inst, table(inst, {L({n(0), n(0)}), L({}), L({n(0)})}), b);
  CHECK_FALSE(wrong_entry.pass());
  CHECK(wrong_entry.checks.find("len-equation")->pass);
  const auto* g_eq = wrong_entry.checks.find("nth-equation");
  REQUIRE(g_eq != nullptr);
  CHECK_FALSE(g_eq->pass);
  CHECK(g_eq->counterexample.find("p") != std::string::npos);

  const auto wrong_len = verify_solution(inst, table(inst, {L({n(0)}), L({}), L({n(0)})}), b);
  CHECK_FALSE(wrong_len.checks.find("len-equation")->pass);
}

TEST_CASE("brute force") {
  const Instance inst = sample();
  const Budget b = inst.fit(Budget{});
  const BruteForce bf = brute_force_solutions(inst, b);
  CHECK(bf.candidates == 8);
  REQUIRE(bf.solutions.size() == 1);
  CHECK(setmodel::arrows_equal(bf.solutions.front(), construct_h(inst, b), b));

  const Instance empty{setmodel::letters(2), ObjExpr::fin({"p", "q"}), {0, 0}, {{}, {}}};
  const BruteForce none = brute_force_solutions(empty, empty.fit(Budget{}));
  CHECK(none.candidates == 1);
  CHECK(none.solutions.size() == 1);

  Budget tiny = b;
  tiny.card_cap = 4;
  CHECK_THROWS_AS(brute_force_solutions(inst, tiny), BudgetError);
}

TEST_CASE("uniqueness by theory") {
  const Instance inst = sample();
  const Budget b = inst.fit(Budget{});
  const Arrow h = construct_h(inst, b);
  const auto rep = uniqueness_by_theory(inst, h, brute_force_solutions(inst, b).solutions.front(), b);
  CHECK(rep.pass());
  CHECK(rep.checks.laws.size() >= 3);
  const Arrow bad = table(inst, {L({n(0), n(0)}), L({}), L({n(0)})});
  CHECK_THROWS_AS(uniqueness_by_theory(inst, h, bad, b), ConstraintError);

  const Instance empty{setmodel::letters(1), ObjExpr::fin({"p"}), {0}, {{}}};
  const Budget eb = empty.fit(Budget{});
  const Arrow he = construct_h(empty, eb);
  CHECK(uniqueness_by_theory(empty, he, he, eb).pass());
}

TEST_CASE("instance validation") {
  Instance bad = sample();
  bad.g[0].pop_back();
  CHECK_THROWS_AS(bad.validate(), StructuralError);
  Instance out_of_range = sample();
  out_of_range.g[0][0] = 7;
  CHECK_THROWS_AS(out_of_range.validate(), StructuralError);
}

TEST_CASE("property: every small instance has exactly the constructed solution") {
  const ObjExpr X = setmodel::letters(2);
  const ObjExpr A = ObjExpr::fin({"p", "q"});
  for (std::uint64_t l0 = 0; l0 <= 2; ++l0)
    for (std::uint64_t l1 = 0; l1 <= 2; ++l1) {
      const std::uint64_t total = l0 + l1;
      for (std::uint64_t code = 0; code < (1u << total); ++code) {
        Instance inst{X, A, {l0, l1}, {{}, {}}};
        std::uint64_t bits = code;
        for (std::uint64_t m = 0; m < l0; ++m, bits >>= 1) inst.g[0].push_back(bits & 1);
        for (std::uint64_t m = 0; m < l1; ++m, bits >>= 1) inst.g[1].push_back(bits & 1);
        const Budget b = inst.fit(Budget{});
        const Arrow h = construct_h(inst, b);
        for (std::uint64_t ai = 0; ai < 2; ++ai) {
          const Elem list = h(n(ai));
          REQUIRE(list.size() == inst.lengths[ai]);
          for (std::uint64_t m = 0; m < list.size(); ++m) CHECK(list.items()[m] == n(inst.g[ai][m]));
        }
        CHECK(brute_force_solutions(inst, b).solutions.size() == 1);
      }
    }
}

TEST_CASE("slice operations") {
  const ObjExpr X = setmodel::letters(2);
  const SliceObj p = over_terminal(X);
  const Arrow id1 = setmodel::identity(ObjExpr::unit());
  const PiSlice same = pi_f(id1, p, budget(3));
  CHECK(same.fiber_counts == std::vector<std::uint64_t>{2});

  const auto& e = make_E();
  const SliceObj pulled = delta_f(setmodel::terminal_map(e.E), p);
  const PiSlice pi = pi_f(e.pi2E, pulled, budget(4));
  CHECK(pi.fiber_counts == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  const SliceObj summed = sigma_f(setmodel::terminal_map(N), pi.slice);
  CHECK(summed.base == ObjExpr::unit());
  CHECK(pi.sections.size() == 31);
}

TEST_CASE("polynomial extension is in bijection with short lists") {
  const std::uint64_t expected[] = {1, 5, 31, 121};
  for (std::size_t k = 0; k <= 3; ++k) {
    const ObjExpr X = setmodel::letters(k);
    const Budget b = budget(4, 4);
    const PolyExtension ext = poly_extension(list_polynomial(), over_terminal(X), b);
    CHECK(ext.carrier.size() == expected[k]);
    CHECK(check_list_bijection(ext, X, b).pass);
  }
  const Elem l = L({n(1), n(0)});
  CHECK(section_to_list(list_to_section(l)) == l);
}
