#include "polylist/setmodel/category.hpp"

#include "polylist/errors.hpp"

#include <map>
#include <mutex>

namespace polylist::setmodel {

namespace {

std::string mismatch(const char* what, const ObjExpr& a, const ObjExpr& b) {
  return std::string(what) + ": " + a.to_string() + " vs " + b.to_string();
}

}  // namespace

Arrow identity(const ObjExpr& obj) {
  return Arrow(obj, obj, [](const Elem& e) { return e; }, "id");
}

Arrow compose(const Arrow& g, const Arrow& f) {
  if (!(f.cod() == g.dom())) throw StructuralError(mismatch("cannot compose", f.cod(), g.dom()));
  auto gf = [g, f](const Elem& e) { return g(f(e)); };
  std::string label;
  if (!g.label().empty() && !f.label().empty()) label = g.label() + "." + f.label();
  return Arrow(f.dom(), g.cod(), std::move(gf), std::move(label));
}

Arrow compose_all(const std::vector<Arrow>& chain) {
  if (chain.empty()) throw StructuralError("empty composition chain");
  Arrow acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
  return acc;
}

Arrow terminal_map(const ObjExpr& obj) {
  return Arrow(obj, ObjExpr::unit(), [](const Elem&) { return Elem::star(); }, "!");
}

Arrow pairing(const std::vector<Arrow>& fs) {
  if (fs.empty()) throw StructuralError("pairing of no arrows needs an explicit domain");
  if (fs.size() == 1) return fs.front();
  std::vector<ObjExpr> cods;
  std::string label = "<";
  bool labelled = true;
  for (const auto& f : fs) {
    if (!(f.dom() == fs.front().dom()))
      throw StructuralError(mismatch("pairing needs a common domain", fs.front().dom(), f.dom()));
    cods.push_back(f.cod());
    if (label.size() > 1) label += ",";
    label += f.name();
    labelled = labelled && !f.label().empty();
  }
  label = labelled ? label + ">" : std::string();
  auto fn = [fs](const Elem& e) {
    std::vector<Elem> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(f(e));
    return Elem::tup(std::move(out));
  };
  return Arrow(fs.front().dom(), ObjExpr::prod(std::move(cods)), std::move(fn), std::move(label));
}

Arrow proj(const ObjExpr& prod, std::size_t i) {
  const ObjExpr& c = prod.carrier();
  if (!c.is(ObjExpr::Kind::prod)) throw StructuralError("projection out of non-product " + prod.to_string());
  if (i >= c.components().size())
    throw StructuralError("projection index " + std::to_string(i) + " out of range for " + prod.to_string());
  return Arrow(prod, c.components()[i], [i](const Elem& e) { return e.at(i); },
               "pi" + std::to_string(i + 1));
}

Arrow par(const std::vector<Arrow>& fs) {
  if (fs.size() == 1) return fs.front();
  std::vector<ObjExpr> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom());
    cods.push_back(f.cod());
  }
  auto fn = [fs](const Elem& e) {
    std::vector<Elem> out;
    out.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fs[i](e.at(i)));
    return Elem::tup(std::move(out));
  };
  return Arrow(ObjExpr::prod(std::move(doms)), ObjExpr::prod(std::move(cods)), std::move(fn));
}

Arrow constant(const ObjExpr& dom, const ObjExpr& cod, const Elem& value) {
  if (!elem_has_type(value, cod))
    throw StructuralError("constant " + value.to_string() + " is not an element of " + cod.to_string());
  return Arrow(dom, cod, [value](const Elem&) { return value; }, render(value, cod));
}

Arrow global(const ObjExpr& cod, const Elem& value) { return constant(ObjExpr::unit(), cod, value); }

Arrow restrict(const Arrow& f, const ObjExpr& sub) {
  if (!sub.is_subobject_of(f.dom()))
    throw StructuralError(mismatch("cannot restrict along a non-inclusion", sub, f.dom()));
  return f.with_dom(sub);
}

Arrow inclusion(const ObjExpr& sub, const ObjExpr& into) {
  if (!sub.is_subobject_of(into)) throw StructuralError(mismatch("not a subobject", sub, into));
  return Arrow(sub, into, [](const Elem& e) { return e; }, "incl");
}

Arrow memoize(const Arrow& f) {
  struct Memo {
    std::mutex mu;
    std::map<Elem, Elem> seen;
  };
  auto memo = std::make_shared<Memo>();
  return Arrow(
      f.dom(), f.cod(),
      [f, memo](const Elem& e) {
        {
          std::lock_guard<std::mutex> lock(memo->mu);
          auto it = memo->seen.find(e);
          if (it != memo->seen.end()) return it->second;
        }
        Elem v = f(e);
        std::lock_guard<std::mutex> lock(memo->mu);
        memo->seen.emplace(e, v);
        return v;
      },
      f.label());
}

Arrow from_table(const ObjExpr& dom, const ObjExpr& cod, std::vector<std::pair<Elem, Elem>> table,
                 std::string label) {
  auto map = std::make_shared<std::map<Elem, Elem>>();
  for (auto& [k, v] : table) {
    if (!elem_has_type(v, cod))
      throw StructuralError("table value " + v.to_string() + " is not an element of " + cod.to_string());
    if (!map->emplace(std::move(k), std::move(v)).second)
      throw StructuralError("duplicate key in arrow table");
  }
  return Arrow(
      dom, cod,
      [map](const Elem& e) {
        auto it = map->find(e);
        if (it == map->end()) throw StructuralError("arrow table has no entry for " + e.to_string());
        return it->second;
      },
      std::move(label));
}

Equality arrows_equal(const Arrow& f, const Arrow& g, const Budget& budget) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw StructuralError("arrows are not parallel: " + f.dom().to_string() + " -> " +
                          f.cod().to_string() + " vs " + g.dom().to_string() + " -> " +
                          g.cod().to_string());
  Enumeration dom = enumerate(f.dom(), budget);
  Equality out;
  out.truncated = dom.truncated;
  for (const auto& e : dom.elems) {
    ++out.checked;
    if (!(f(e) == g(e))) {
      out.equal = false;
      out.counterexample = e;
      return out;
    }
  }
  return out;
}

}  // namespace polylist::setmodel
