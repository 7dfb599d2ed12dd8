#include "polylist/setmodel/object.hpp"

#include "polylist/errors.hpp"

#include <sstream>
#include <variant>

namespace polylist::setmodel {

struct ObjExpr::Node {
  Kind kind = Kind::unit;
  std::vector<std::string> names;
  std::vector<ObjExpr> children;  // list: [elem]; prod: components; sub: [base]
  std::vector<Arrow> arrows;      // sub: [lhs, rhs]
};

ObjExpr::ObjExpr() : ObjExpr(unit()) {}

ObjExpr ObjExpr::unit() {
  static const auto n = std::make_shared<const Node>(Node{Kind::unit, {}, {}, {}});
  return ObjExpr(n);
}

ObjExpr ObjExpr::nat() {
  static const auto n = std::make_shared<const Node>(Node{Kind::nat, {}, {}, {}});
  return ObjExpr(n);
}

ObjExpr ObjExpr::fin(std::vector<std::string> names) {
  return ObjExpr(std::make_shared<const Node>(Node{Kind::fin, std::move(names), {}, {}}));
}

ObjExpr ObjExpr::list_of(ObjExpr elem) {
  return ObjExpr(std::make_shared<const Node>(Node{Kind::list, {}, {std::move(elem)}, {}}));
}

ObjExpr ObjExpr::prod(std::vector<ObjExpr> components) {
  if (components.empty()) return unit();
  if (components.size() == 1) return components.front();
  return ObjExpr(std::make_shared<const Node>(Node{Kind::prod, {}, std::move(components), {}}));
}

ObjExpr ObjExpr::sub(ObjExpr base, Arrow lhs, Arrow rhs) {
  if (!(lhs.dom() == base) || !(rhs.dom() == base))
    throw StructuralError("subobject arrows must have domain " + base.to_string() + ", got " +
                          lhs.dom().to_string() + " and " + rhs.dom().to_string());
  if (!(lhs.cod() == rhs.cod()))
    throw StructuralError("subobject arrows must share a codomain, got " + lhs.cod().to_string() +
                          " and " + rhs.cod().to_string());
  return ObjExpr(std::make_shared<const Node>(
      Node{Kind::sub, {}, {std::move(base)}, {std::move(lhs), std::move(rhs)}}));
}

ObjExpr::Kind ObjExpr::kind() const noexcept { return node_->kind; }

const std::vector<std::string>& ObjExpr::names() const {
  if (kind() != Kind::fin) throw StructuralError("not a finite object: " + to_string());
  return node_->names;
}

const ObjExpr& ObjExpr::element() const {
  if (kind() != Kind::list) throw StructuralError("not a list object: " + to_string());
  return node_->children.front();
}

const std::vector<ObjExpr>& ObjExpr::components() const {
  if (kind() != Kind::prod) throw StructuralError("not a product: " + to_string());
  return node_->children;
}

const ObjExpr& ObjExpr::base() const {
  if (kind() != Kind::sub) throw StructuralError("not a subobject: " + to_string());
  return node_->children.front();
}

const Arrow& ObjExpr::lhs() const {
  if (kind() != Kind::sub) throw StructuralError("not a subobject: " + to_string());
  return node_->arrows[0];
}

const Arrow& ObjExpr::rhs() const {
  if (kind() != Kind::sub) throw StructuralError("not a subobject: " + to_string());
  return node_->arrows[1];
}

const ObjExpr& ObjExpr::carrier() const {
  const ObjExpr* o = this;
  while (o->kind() == Kind::sub) o = &o->base();
  return *o;
}

bool ObjExpr::is_subobject_of(const ObjExpr& other) const {
  const ObjExpr* o = this;
  while (true) {
    if (*o == other) return true;
    if (o->kind() != Kind::sub) return false;
    o = &o->base();
  }
}

std::vector<ObjExpr> ObjExpr::argument_types() const {
  const ObjExpr& c = carrier();
  switch (c.kind()) {
    case Kind::unit:
      return {};
    case Kind::prod:
      return c.components();
    default:
      return {c};
  }
}

std::string ObjExpr::to_string() const {
  switch (kind()) {
    case Kind::unit:
      return "1";
    case Kind::nat:
      return "N";
    case Kind::fin: {
      std::string s = "{";
      for (std::size_t i = 0; i < node_->names.size(); ++i) {
        if (i) s += ",";
        s += node_->names[i];
      }
      return s + "}";
    }
    case Kind::list:
      return "L(" + element().to_string() + ")";
    case Kind::prod: {
      std::string s;
      for (std::size_t i = 0; i < components().size(); ++i) {
        if (i) s += "*";
        const auto& c = components()[i];
        s += c.is(Kind::prod) ? "(" + c.to_string() + ")" : c.to_string();
      }
      return s;
    }
    case Kind::sub:
      return "{" + base().to_string() + " | " + lhs().name() + " = " + rhs().name() + "}";
  }
  return "?";
}

bool operator==(const ObjExpr& a, const ObjExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjExpr::Kind::unit:
    case ObjExpr::Kind::nat:
      return true;
    case ObjExpr::Kind::fin:
      return a.node_->names == b.node_->names;
    case ObjExpr::Kind::list:
    case ObjExpr::Kind::prod:
      return a.node_->children == b.node_->children;
    case ObjExpr::Kind::sub:
      return a.base() == b.base() && a.lhs().same_as(b.lhs()) && a.rhs().same_as(b.rhs());
  }
  return false;
}

Arrow::Arrow(ObjExpr dom, ObjExpr cod, Fn fn, std::string label)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      fn_(std::make_shared<const Fn>(std::move(fn))),
      label_(std::move(label)) {}

Arrow Arrow::with_dom(ObjExpr dom) const {
  Arrow a = *this;
  a.dom_ = std::move(dom);
  return a;
}

Arrow Arrow::with_cod(ObjExpr cod) const {
  Arrow a = *this;
  a.cod_ = std::move(cod);
  return a;
}

Arrow Arrow::relabel(std::string label) const {
  Arrow a = *this;
  a.label_ = std::move(label);
  return a;
}

bool Arrow::same_as(const Arrow& other) const {
  if (fn_ == other.fn_) return dom_ == other.dom_ && cod_ == other.cod_;
  return !label_.empty() && label_ == other.label_ && dom_ == other.dom_ && cod_ == other.cod_;
}

std::string Budget::to_string() const {
  std::ostringstream os;
  os << "nat_max=" << nat_max << " len_max=" << len_max << " card_cap=" << card_cap
     << " seed=" << seed;
  return os.str();
}

ObjExpr letters(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  return ObjExpr::fin(std::move(names));
}

}  // namespace polylist::setmodel
