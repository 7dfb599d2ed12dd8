#include "polylist/polyadj/slice.hpp"

#include "polylist/errors.hpp"
#include "polylist/polyadj/adjoint.hpp"

#include <map>
#include <set>

namespace polylist::polyadj {

using setmodel::compose;
using setmodel::enumerate;
using setmodel::Enumeration;
using setmodel::LawAccumulator;
using setmodel::render;

namespace {

Enumeration complete(const ObjExpr& o, const Budget& budget, const char* role) {
  Enumeration e = enumerate(o, budget);
  if (e.truncated) throw BudgetError(std::string(role) + " " + o.to_string() + " does not fit in card_cap",
                                     std::to_string(budget.card_cap) + "+");
  return e;
}

}  // namespace

SliceObj::SliceObj(ObjExpr c, Arrow p) : carrier(std::move(c)), proj(std::move(p)), base(proj.cod()) {
  if (!(proj.dom() == carrier))
    throw StructuralError("slice projection starts at " + proj.dom().to_string() + ", not at " + carrier.to_string());
}

SliceObj over_terminal(const ObjExpr& X) { return SliceObj(X, setmodel::terminal_map(X)); }

SliceObj sigma_f(const Arrow& f, const SliceObj& p) {
  if (!(f.dom() == p.base))
    throw StructuralError("cannot compose a slice over " + p.base.to_string() + " with an arrow out of " +
                          f.dom().to_string());
  return SliceObj(p.carrier, compose(f, p.proj));
}

SliceObj delta_f(const Arrow& f, const SliceObj& q) {
  setmodel::Pullback pb = setmodel::pullback_obj(f, q.proj);
  return SliceObj(pb.obj, pb.p1);
}

PiSlice pi_f(const Arrow& f, const SliceObj& p, const Budget& budget) {
  if (!(p.base == f.dom()))
    throw StructuralError("dependent product along an arrow out of " + f.dom().to_string() + " needs a slice over it, got one over " +
                          p.base.to_string());
  const ObjExpr& B = f.cod();
  const Enumeration as = complete(f.dom(), budget, "domain");
  const Enumeration ps = complete(p.carrier, budget, "slice carrier");
  const Enumeration bs = complete(B, budget, "base");

  std::map<Elem, std::vector<Elem>> over;  // p-fiber over each a
  for (const auto& a : as.elems) over[a];
  for (const auto& e : ps.elems) over[p.proj(e)].push_back(e);
  auto fiber_of = [f, as](const Elem& b) {
    std::vector<Elem> out;
    for (const auto& a : as.elems)
      if (f(a) == b) out.push_back(a);
    return out;
  };

  const ObjExpr LP = ObjExpr::list_of(p.carrier);
  const ObjExpr pair = ObjExpr::prod({B, LP});
  const Arrow pp = p.proj;
  Arrow invalid(
      pair, ObjExpr::nat(),
      [fiber_of, pp](const Elem& e) {
        const auto fiber = fiber_of(e.at(0));
        const auto& entries = e.at(1).items();
        bool ok = entries.size() == fiber.size();
        for (std::size_t i = 0; ok && i < fiber.size(); ++i) ok = pp(entries[i]) == fiber[i];
        return Elem::num(ok ? 0 : 1);
      },
      "sections[" + f.name() + "," + p.proj.name() + "]");
  ObjExpr carrier = arith::where_zero(invalid);
  PiSlice out{SliceObj(carrier, setmodel::proj(carrier, 0)), {}, {}};

  std::uint64_t total = 0;
  for (const auto& b : bs.elems) {
    const auto fiber = fiber_of(b);
    long double count = 1;
    for (const auto& a : fiber) count *= static_cast<long double>(over[a].size());
    if (static_cast<long double>(total) + count > static_cast<long double>(budget.card_cap))
      throw BudgetError("dependent product exceeds card_cap", size_string(total + count));
    out.fiber_counts.push_back(static_cast<std::uint64_t>(count));
    total += static_cast<std::uint64_t>(count);
    if (count == 0) continue;
    std::vector<std::size_t> digits(fiber.size(), 0);
    while (true) {
      std::vector<Elem> entries;
      for (std::size_t i = 0; i < fiber.size(); ++i) entries.push_back(over[fiber[i]][digits[i]]);
      out.sections.push_back(Elem::tup({b, Elem::seq(std::move(entries))}));
      std::size_t pos = fiber.size();
      while (pos > 0 && ++digits[pos - 1] == over[fiber[pos - 1]].size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

PolyDiagram::PolyDiagram(Arrow s_, Arrow f_, Arrow t_) : s(std::move(s_)), f(std::move(f_)), t(std::move(t_)) {
  if (!(s.dom() == f.dom())) throw StructuralError("polynomial legs s and f must share a domain");
  if (!(f.cod() == t.dom())) throw StructuralError("polynomial leg t must start where f ends");
}

PolyDiagram list_polynomial() {
  const EObject& e = make_E();
  return PolyDiagram(setmodel::terminal_map(e.E), e.pi2E, setmodel::terminal_map(ObjExpr::nat()));
}

PolyExtension poly_extension(const PolyDiagram& P, const SliceObj& X, const Budget& budget) {
  if (!(X.base == P.s.cod()))
    throw StructuralError("input must live over " + P.s.cod().to_string() + ", not " + X.base.to_string());
  SliceObj pulled = delta_f(P.s, X);
  PiSlice pi = pi_f(P.f, pulled, budget);
  SliceObj summed = sigma_f(P.t, pi.slice);
  Enumeration bases = complete(P.f.cod(), budget, "base");
  return PolyExtension{summed, std::move(pi.sections), std::move(bases.elems), std::move(pi.fiber_counts)};
}

Elem section_to_list(const Elem& e) {
  std::vector<Elem> items;
  for (const auto& entry : e.at(1).items()) items.push_back(entry.at(1));
  return Elem::seq(std::move(items));
}

Elem list_to_section(const Elem& list) {
  const std::uint64_t n = list.size();
  std::vector<Elem> entries;
  for (std::uint64_t i = 0; i < n; ++i)
    entries.push_back(Elem::tup({Elem::tup({Elem::num(i), Elem::num(n)}), list.items()[i]}));
  return Elem::tup({Elem::num(n), Elem::seq(std::move(entries))});
}

setmodel::LawResult check_list_bijection(const PolyExtension& ext, const ObjExpr& X, const Budget& budget) {
  LawAccumulator acc("BIJECTION");
  Budget lb = budget;
  lb.len_max = budget.nat_max;
  const ObjExpr LX = ObjExpr::list_of(X);
  const Enumeration lists = complete(LX, lb, "list object");
  const std::set<Elem> carrier(ext.carrier.begin(), ext.carrier.end());
  if (carrier.size() != ext.carrier.size()) acc.fail("carrier has duplicate sections");
  if (ext.carrier.size() != lists.elems.size())
    acc.fail("carrier has " + std::to_string(ext.carrier.size()) + " elements, lists " +
             std::to_string(lists.elems.size()));
  for (const auto& e : ext.carrier) {
    acc.count();
    if (!elem_has_type(e, ext.result.carrier)) acc.fail("not a section: " + e.to_string());
    Elem l = section_to_list(e);
    if (!elem_has_type(l, LX) || l.size() > lb.len_max) acc.fail("image is not a short list: " + e.to_string());
    if (!(list_to_section(l) == e)) acc.fail("round trip moves " + e.to_string());
  }
  for (const auto& l : lists.elems) {
    acc.count();
    Elem e = list_to_section(l);
    if (!carrier.count(e)) acc.fail(render(l, LX) + " has no preimage");
    if (!(section_to_list(e) == l)) acc.fail("round trip moves " + render(l, LX));
  }
  return acc.result();
}

}  // namespace polylist::polyadj
