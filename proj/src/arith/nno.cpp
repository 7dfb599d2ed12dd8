#include "polylist/arith/nno.hpp"

#include "polylist/errors.hpp"
#include "polylist/setmodel/report.hpp"

#include <map>

namespace polylist::arith {

using setmodel::Enumeration;
using setmodel::enumerate;

const NnoKit& nno() {
  static const NnoKit kit = [] {
    ObjExpr N = ObjExpr::nat();
    Arrow zero(ObjExpr::unit(), N, [](const Elem&) { return Elem::num(0); }, "0");
    Arrow succ(N, N, [](const Elem& e) { return Elem::num(e.as_num() + 1); }, "s");
    return NnoKit{N, zero, succ};
  }();
  return kit;
}

Arrow nno_rec(const Arrow& g, const Arrow& h, std::string label) {
  const ObjExpr& A = g.dom();
  const ObjExpr& B = g.cod();
  ObjExpr expected = ObjExpr::prod({A, ObjExpr::nat(), B});
  if (!(h.dom() == expected))
    throw StructuralError("recursion step must have domain " + expected.to_string() + ", got " +
                          h.dom().to_string());
  if (!(h.cod() == B))
    throw StructuralError("recursion step must land in " + B.to_string() + ", got " + h.cod().to_string());
  auto fn = [g, h](const Elem& an) {
    const Elem& a = an.at(0);
    const std::uint64_t n = an.at(1).as_u64();
    Elem b = g(a);
    for (std::uint64_t i = 0; i < n; ++i) b = h(Elem::tup({a, Elem::num(i), std::move(b)}));
    return b;
  };
  return Arrow(ObjExpr::prod({A, ObjExpr::nat()}), B, std::move(fn), std::move(label));
}

setmodel::LawResult check_nno_rec_equations(std::string id, const Arrow& g, const Arrow& h,
                                            const Arrow& f, const Budget& budget) {
  setmodel::LawAccumulator acc(std::move(id));
  Enumeration as = enumerate(g.dom(), budget);
  for (const auto& a : as.elems) {
    acc.count();
    Elem base = f(Elem::tup({a, Elem::num(0)}));
    if (!(base == g(a))) {
      acc.fail("f(" + render(a, g.dom()) + ",0) != g(" + render(a, g.dom()) + ")");
      break;
    }
    for (std::uint64_t n = 0; n < budget.nat_max; ++n) {
      acc.count();
      Elem prev = f(Elem::tup({a, Elem::num(n)}));
      Elem next = f(Elem::tup({a, Elem::num(n + 1)}));
      Elem stepped = h(Elem::tup({a, Elem::num(n), prev}));
      if (!(next == stepped)) {
        const std::string sa = render(a, g.dom()), sn = std::to_string(n);
        acc.fail("f(" + sa + "," + std::to_string(n + 1) + ") = " + render(next, f.cod()) + " but h(" + sa + "," + sn +
                 ",f(" + sa + "," + sn + ")) = " + render(stepped, f.cod()));
        break;
      }
    }
  }
  return acc.result();
}

std::uint64_t count_nno_rec_solutions(const Arrow& g, const Arrow& h, const Budget& budget) {
  Enumeration as = enumerate(g.dom(), budget);
  Enumeration bs = enumerate(g.cod(), budget);
  if (as.truncated || bs.truncated) throw BudgetError("recursor hom-set carriers exceed card_cap", "?");
  const std::size_t cells = as.elems.size() * (budget.nat_max + 1);
  const std::size_t nb = bs.elems.size();
  // |B|^cells candidate tables
  long double space = 1;
  for (std::size_t i = 0; i < cells; ++i) space *= static_cast<long double>(nb);
  if (space > static_cast<long double>(budget.card_cap))
    throw BudgetError("recursor hom-set too large to enumerate", size_string(space));
  if (cells > 0 && nb == 0) return 0;

  std::vector<std::size_t> digits(cells, 0);
  std::uint64_t count = 0;
  const std::size_t width = budget.nat_max + 1;
  while (true) {
    // cell index = a_index * width + n
    bool ok = true;
    for (std::size_t ai = 0; ai < as.elems.size() && ok; ++ai) {
      const Elem& a = as.elems[ai];
      if (!(bs.elems[digits[ai * width]] == g(a))) ok = false;
      for (std::size_t n = 0; n + 1 < width && ok; ++n) {
        const Elem& prev = bs.elems[digits[ai * width + n]];
        if (!(bs.elems[digits[ai * width + n + 1]] == h(Elem::tup({a, Elem::num(n), prev})))) ok = false;
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

}  // namespace polylist::arith
