#include "polylist/setmodel/limits.hpp"

#include "polylist/errors.hpp"

namespace polylist::setmodel {

Arrow Equalizer::mediate(const Arrow& h, const Budget& budget) const {
  if (!(h.cod() == f.dom()))
    throw StructuralError("mediating arrow must land in " + f.dom().to_string() + ", got " +
                          h.cod().to_string());
  auto r = arrows_equal(compose(f, h), compose(g, h), budget);
  if (!r.equal)
    throw ConstraintError("arrow does not equalize " + f.name() + " and " + g.name(),
                          render(*r.counterexample, h.dom()));
  return h.with_cod(obj);
}

Equalizer equalizer_obj(const Arrow& f, const Arrow& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw StructuralError("equalizer needs parallel arrows: " + f.dom().to_string() + " -> " +
                          f.cod().to_string() + " vs " + g.dom().to_string() + " -> " +
                          g.cod().to_string());
  ObjExpr obj = ObjExpr::sub(f.dom(), f, g);
  return Equalizer{obj, inclusion(obj, f.dom()), f, g};
}

Arrow Pullback::mediate(const Arrow& u, const Arrow& v, const Budget& budget) const {
  if (!(u.cod() == f.dom()) || !(v.cod() == g.dom()))
    throw StructuralError("cone legs do not match the pullback corner");
  auto r = arrows_equal(compose(f, u), compose(g, v), budget);
  if (!r.equal)
    throw ConstraintError("cone does not commute over " + f.cod().to_string(),
                          render(*r.counterexample, u.dom()));
  return pairing({u, v}).with_cod(obj);
}

Pullback pullback_obj(const Arrow& f, const Arrow& g) {
  if (!(f.cod() == g.cod()))
    throw StructuralError("pullback needs a common codomain: " + f.cod().to_string() + " vs " +
                          g.cod().to_string());
  ObjExpr prod = ObjExpr::prod({f.dom(), g.dom()});
  ObjExpr obj = ObjExpr::sub(prod, compose(f, proj(prod, 0)), compose(g, proj(prod, 1)));
  return Pullback{obj, proj(obj, 0), proj(obj, 1), f, g};
}

Arrow case_merge(const ObjExpr& dom, const std::vector<CasePart>& parts, const Budget& budget) {
  if (parts.empty()) throw StructuralError("case_merge needs at least one part");
  const ObjExpr& cod = parts.front().branch.cod();
  for (const auto& p : parts) {
    if (!p.part.is_subobject_of(dom))
      throw StructuralError("case part " + p.part.to_string() + " is not a subobject of " + dom.to_string());
    if (!(p.branch.dom() == p.part))
      throw StructuralError("branch domain " + p.branch.dom().to_string() + " differs from its part " +
                            p.part.to_string());
    if (!(p.branch.cod() == cod))
      throw StructuralError("branches disagree on codomain: " + cod.to_string() + " vs " +
                            p.branch.cod().to_string());
  }

  Enumeration all = enumerate(dom, budget);
  std::string uncovered, doubled;
  for (const auto& e : all.elems) {
    std::size_t hits = 0;
    for (const auto& p : parts)
      if (elem_has_type(e, p.part)) ++hits;
    if (hits == 0) uncovered += (uncovered.empty() ? "" : ", ") + render(e, dom);
    if (hits > 1) doubled += (doubled.empty() ? "" : ", ") + render(e, dom);
  }
  if (!uncovered.empty() || !doubled.empty()) {
    std::string msg = "case parts do not partition " + dom.to_string();
    if (!uncovered.empty()) msg += "; uncovered: " + uncovered;
    if (!doubled.empty()) msg += "; covered twice: " + doubled;
    throw CoverageError(msg);
  }

  auto fn = [parts, dom](const Elem& e) {
    const CasePart* hit = nullptr;
    for (const auto& p : parts) {
      if (!elem_has_type(e, p.part)) continue;
      if (hit) throw CoverageError("element " + render(e, dom) + " lies in two case parts");
      hit = &p;
    }
    if (!hit) throw CoverageError("element " + render(e, dom) + " lies in no case part");
    return hit->branch(e);
  };
  return Arrow(dom, cod, std::move(fn));
}

}  // namespace polylist::setmodel
