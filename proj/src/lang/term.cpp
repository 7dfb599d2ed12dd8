#include "polylist/lang/term.hpp"

#include "polylist/arith/ops.hpp"
#include "polylist/errors.hpp"
#include "polylist/listobj/lists.hpp"
#include "polylist/setmodel/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace polylist::lang {

using setmodel::compose;
using setmodel::pairing;

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::var;
  t.name_ = std::move(name);
  return t;
}

Term Term::app(std::string callee, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::app;
  t.name_ = std::move(callee);
  t.args_ = std::move(args);
  return t;
}

Term Term::app(Arrow callee, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::app;
  t.name_ = callee.name();
  t.arrow_ = std::move(callee);
  t.args_ = std::move(args);
  return t;
}

Term Term::tuple(std::vector<Term> items) {
  Term t;
  t.kind_ = Kind::tuple;
  t.args_ = std::move(items);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.args_ != b.args_) return false;
  if (a.arrow_.has_value() != b.arrow_.has_value()) return false;
  return !a.arrow_ || a.arrow_->same_as(*b.arrow_);
}

namespace {

bool is_builtin_call(const Term& t, const char* name, std::size_t arity) {
  return t.kind() == Term::Kind::app && !t.arrow() && t.name() == name && t.args().size() == arity;
}

// s(...s(0)...) as a count
std::optional<std::uint64_t> numeral_value(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (is_builtin_call(*cur, "s", 1)) {
    ++n;
    cur = &cur->args()[0];
  }
  if (is_builtin_call(*cur, "0", 0)) return n;
  return std::nullopt;
}

// cons(x1, ... cons(xn, nil)) as its entries
std::optional<std::vector<const Term*>> list_literal(const Term& t) {
  std::vector<const Term*> items;
  const Term* cur = &t;
  while (is_builtin_call(*cur, "cons", 2)) {
    items.push_back(&cur->args()[0]);
    cur = &cur->args()[1];
  }
  if (is_builtin_call(*cur, "nil", 0)) return items;
  return std::nullopt;
}

std::string join(const std::vector<Term>& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + ts[i].to_string();
  return s;
}

}  // namespace

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::var:
      return name_;
    case Kind::tuple:
      return "(" + join(args_) + ")";
    case Kind::app:
      break;
  }
  if (!arrow_) {
    if (auto n = numeral_value(*this)) return std::to_string(*n);
    if (auto items = list_literal(*this)) {
      std::string s = "[";
      for (std::size_t i = 0; i < items->size(); ++i) s += (i ? ", " : "") + (*items)[i]->to_string();
      return s + "]";
    }
  }
  return name_ + "(" + join(args_) + ")";
}

const ObjExpr* Scope::find_set(const std::string& name) const {
  for (const auto& [n, o] : sets)
    if (n == name) return &o;
  return nullptr;
}

std::optional<std::pair<ObjExpr, std::uint64_t>> Scope::find_atom(const std::string& name) const {
  for (const auto& [n, o] : sets) {
    const auto& names = o.names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return std::pair{o, static_cast<std::uint64_t>(it - names.begin())};
  }
  return std::nullopt;
}

namespace {

ObjExpr N() { return ObjExpr::nat(); }

// Builtin signatures over one type variable V (list element or ite branch).
enum class Slot { nat, v, list_v };

struct Signature {
  std::vector<Slot> args;
  Slot result;
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table = [] {
    std::map<std::string, Signature> m;
    const Signature nat2{{Slot::nat, Slot::nat}, Slot::nat};
    m["0"] = {{}, Slot::nat};
    m["s"] = {{Slot::nat}, Slot::nat};
    m["P"] = {{Slot::nat}, Slot::nat};
    for (const char* op : {"add", "mul", "monus", "min", "max", "absdiff", "idUntil"}) m[op] = nat2;
    m["ite"] = {{Slot::v, Slot::v, Slot::nat}, Slot::v};
    m["nil"] = {{}, Slot::list_v};
    m["cons"] = {{Slot::v, Slot::list_v}, Slot::list_v};
    m["len"] = {{Slot::list_v}, Slot::nat};
    m["tr"] = {{Slot::list_v}, Slot::list_v};
    m["tail"] = {{Slot::nat, Slot::list_v}, Slot::list_v};
    m["zerothDef"] = {{Slot::v, Slot::list_v}, Slot::v};
    m["nthDef"] = {{Slot::v, Slot::nat, Slot::list_v}, Slot::v};
    m["concat"] = {{Slot::list_v, Slot::list_v}, Slot::list_v};
    return m;
  }();
  return table;
}

Arrow builtin_arrow(const std::string& name, const std::optional<ObjExpr>& v) {
  const auto& ar = arith::standard_arith();
  if (name == "0") return arith::nno().zero;
  if (name == "s") return arith::nno().succ;
  if (name == "P") return ar.pred;
  if (name == "add") return ar.add;
  if (name == "mul") return ar.mul;
  if (name == "monus") return ar.monus;
  if (name == "min") return ar.min;
  if (name == "max") return ar.max;
  if (name == "absdiff") return ar.absdiff;
  if (name == "idUntil") return arith::id_until();
  if (name == "ite") return arith::ite(*v);
  const listobj::ListOps ops = listobj::list_ops(*v);
  if (name == "nil") return ops.kit.nil;
  if (name == "cons") return ops.kit.cons;
  if (name == "len") return ops.len;
  if (name == "tr") return ops.tr;
  if (name == "tail") return ops.tail;
  if (name == "zerothDef") return ops.zeroth_def;
  if (name == "nthDef") return ops.nth_def;
  if (name == "concat") return ops.concat;
  throw TypeError("unknown function `" + name + "`");
}

ObjExpr slot_type(Slot s, const std::optional<ObjExpr>& v) {
  switch (s) {
    case Slot::nat:
      return N();
    case Slot::v:
      return *v;
    case Slot::list_v:
      return ObjExpr::list_of(*v);
  }
  return N();
}

// Raised when a term (nil) cannot be typed without an expected type.
class NeedsType : public TypeError {
 public:
  using TypeError::TypeError;
};

struct Elab {
  ObjExpr type;
  Arrow arrow;  // base(C) -> type
};

Elab elab(const Term& t, const Context& C, const std::optional<ObjExpr>& expected);

Elab elab_checked(const Term& t, const Context& C, const ObjExpr& want, const Term& whole, std::size_t pos) {
  Elab e = elab(t, C, want);
  if (!(e.type == want))
    throw TypeError("argument " + std::to_string(pos + 1) + " of `" + whole.to_string() + "` must be " +
                    want.to_string() + ", got " + e.type.to_string() + " for `" + t.to_string() + "`");
  return e;
}

Arrow apply(const Arrow& f, const std::vector<Elab>& args, const ObjExpr& base) {
  if (args.empty()) return compose(f, setmodel::terminal_map(base));
  std::vector<Arrow> as;
  for (const auto& a : args) as.push_back(a.arrow);
  Arrow joined = pairing(as);
  if (!(joined.cod() == f.dom())) {
    const ObjExpr target = f.dom();
    joined = Arrow(
        joined.dom(), target,
        [joined, target](const Elem& e) {
          Elem v = joined(e);
          if (!setmodel::elem_has_type(v, target))
            throw ConstraintError("argument lies outside " + target.to_string(), setmodel::render(v, joined.cod()));
          return v;
        },
        joined.label());
  }
  return compose(f, joined);
}

// g((a, b)) is read as g(a, b)
std::vector<Term> flatten(const Term& t, std::size_t arity) {
  const auto& args = t.args();
  if (args.size() == 1 && arity != 1 && args[0].kind() == Term::Kind::tuple) return args[0].args();
  return args;
}

Elab elab_builtin(const Term& t, const Context& C, const std::optional<ObjExpr>& expected) {
  auto it = signatures().find(t.name());
  if (it == signatures().end()) throw TypeError("unknown function `" + t.name() + "` in `" + t.to_string() + "`");
  const Signature& sig = it->second;
  std::vector<Term> args = flatten(t, sig.args.size());
  if (args.size() != sig.args.size())
    throw TypeError("`" + t.name() + "` expects " + std::to_string(sig.args.size()) + " argument(s), got " +
                    std::to_string(args.size()) + " in `" + t.to_string() + "`");

  std::optional<ObjExpr> v;
  std::vector<std::optional<Elab>> done(args.size());
  std::vector<std::size_t> deferred;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const Slot s = sig.args[i];
    if (s == Slot::nat || v) {
      done[i] = elab_checked(args[i], C, slot_type(s, v), t, i);
      continue;
    }
    try {
      Elab e = elab(args[i], C, std::nullopt);
      if (s == Slot::v) {
        v = e.type;
      } else {
        if (!e.type.is(ObjExpr::Kind::list))
          throw TypeError("argument " + std::to_string(i + 1) + " of `" + t.to_string() + "` must be a list, got " +
                          e.type.to_string() + " for `" + args[i].to_string() + "`");
        v = e.type.element();
      }
      done[i] = std::move(e);
    } catch (const NeedsType&) {
      deferred.push_back(i);
    }
  }
  if (!v && expected) {
    if (sig.result == Slot::v) v = *expected;
    if (sig.result == Slot::list_v && expected->is(ObjExpr::Kind::list)) v = expected->element();
  }
  const bool uses_v = sig.result != Slot::nat ||
                      std::any_of(sig.args.begin(), sig.args.end(), [](Slot a) { return a != Slot::nat; });
  if (!v && uses_v)
    throw NeedsType("cannot infer the element type in `" + t.to_string() + "`");
  for (auto i : deferred) done[i] = elab_checked(args[i], C, slot_type(sig.args[i], v), t, i);

  std::vector<Elab> ready;
  for (auto& d : done) ready.push_back(std::move(*d));
  Arrow f = builtin_arrow(t.name(), v);
  return Elab{slot_type(sig.result, v), apply(f, ready, C.base())};
}

Elab elab_arrow_call(const Term& t, const Context& C) {
  const Arrow& f = *t.arrow();
  const ObjExpr& dom = f.dom();
  const auto want = dom.argument_types();
  const auto& raw = t.args();
  if (raw.size() == 1 && want.size() != 1) {
    // a single argument of the whole domain type
    Elab e = elab(raw[0], C, dom.carrier());
    if (e.type == dom.carrier() || e.type == dom) return Elab{f.cod(), apply(f, {e}, C.base())};
  }
  std::vector<Term> args = flatten(t, want.size());
  if (args.size() != want.size())
    throw TypeError("`" + f.name() + "` expects " + std::to_string(want.size()) + " argument(s), got " +
                    std::to_string(args.size()) + " in `" + t.to_string() + "`");
  std::vector<Elab> ready;
  for (std::size_t i = 0; i < args.size(); ++i) ready.push_back(elab_checked(args[i], C, want[i], t, i));
  return Elab{f.cod(), apply(f, ready, C.base())};
}

Elab elab(const Term& t, const Context& C, const std::optional<ObjExpr>& expected) {
  switch (t.kind()) {
    case Term::Kind::var: {
      if (auto i = C.index_of(t.name())) {
        const ObjExpr base = C.base();
        Arrow a = C.vars().size() == 1 ? setmodel::identity(base) : setmodel::proj(base, *i);
        return Elab{C.vars()[*i].type, a.relabel(t.name())};
      }
      if (t.name() == "0" || t.name() == "nil") return elab_builtin(Term::app(t.name(), {}), C, expected);
      if (auto atom = C.scope().find_atom(t.name())) {
        const ObjExpr& X = atom->first;
        return Elab{X, setmodel::constant(C.base(), X, Elem::num(atom->second))};
      }
      throw TypeError("unbound variable `" + t.name() + "`");
    }
    case Term::Kind::tuple: {
      const auto& items = t.args();
      std::vector<ObjExpr> hint;
      if (expected && expected->is(ObjExpr::Kind::prod) && expected->components().size() == items.size())
        hint = expected->components();
      std::vector<Elab> parts;
      std::vector<ObjExpr> types;
      std::vector<Arrow> arrows;
      for (std::size_t i = 0; i < items.size(); ++i) {
        parts.push_back(elab(items[i], C, hint.empty() ? std::nullopt : std::optional<ObjExpr>(hint[i])));
        types.push_back(parts.back().type);
        arrows.push_back(parts.back().arrow);
      }
      if (items.empty()) return Elab{ObjExpr::unit(), setmodel::terminal_map(C.base())};
      return Elab{ObjExpr::prod(types), pairing(arrows)};
    }
    case Term::Kind::app:
      return t.arrow() ? elab_arrow_call(t, C) : elab_builtin(t, C, expected);
  }
  throw TypeError("malformed term");
}

// Elaborates both sides of an equation, letting either side supply the type.
std::pair<Elab, Elab> elab_pair(const Term& l, const Term& r, const Context& C) {
  try {
    Elab a = elab(l, C, std::nullopt);
    Elab b = elab(r, C, a.type);
    return {std::move(a), std::move(b)};
  } catch (const NeedsType&) {
    Elab b = elab(r, C, std::nullopt);
    Elab a = elab(l, C, b.type);
    return {std::move(a), std::move(b)};
  }
}

Term replace(const Term& t, const Subst& sigma, const Context& src) {
  switch (t.kind()) {
    case Term::Kind::var:
      if (src.index_of(t.name())) return sigma.at(t.name());
      return t;
    case Term::Kind::tuple: {
      std::vector<Term> items;
      for (const auto& a : t.args()) items.push_back(replace(a, sigma, src));
      return Term::tuple(std::move(items));
    }
    case Term::Kind::app: {
      std::vector<Term> items;
      for (const auto& a : t.args()) items.push_back(replace(a, sigma, src));
      return t.arrow() ? Term::app(*t.arrow(), std::move(items)) : Term::app(t.name(), std::move(items));
    }
  }
  return t;
}

}  // namespace

Context& Context::bind(std::string name, ObjExpr type) {
  if (index_of(name)) throw TypeError("variable `" + name + "` bound twice");
  if (!constraints_.empty()) throw TypeError("variables must be bound before constraints");
  vars_.push_back({std::move(name), std::move(type)});
  return *this;
}

Context& Context::constrain(Term lhs, Term rhs) {
  auto [a, b] = elab_pair(lhs, rhs, unconstrained());
  if (!(a.type == b.type))
    throw TypeError("constraint sides differ in type: `" + lhs.to_string() + "` : " + a.type.to_string() + " vs `" +
                    rhs.to_string() + "` : " + b.type.to_string());
  constraints_.push_back({std::move(lhs), std::move(rhs)});
  return *this;
}

std::optional<std::size_t> Context::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

ObjExpr Context::base() const {
  std::vector<ObjExpr> types;
  for (const auto& v : vars_) types.push_back(v.type);
  return ObjExpr::prod(std::move(types));
}

Context Context::unconstrained() const {
  Context c(scope_);
  c.vars_ = vars_;
  return c;
}

ObjExpr Context::carrier() const {
  ObjExpr ctx = base();
  const Context plain = unconstrained();
  for (const auto& c : constraints_) {
    auto [a, b] = elab_pair(c.lhs, c.rhs, plain);
    Arrow l = setmodel::restrict(a.arrow, ctx).relabel("[[" + c.lhs.to_string() + "]]");
    Arrow r = setmodel::restrict(b.arrow, ctx).relabel("[[" + c.rhs.to_string() + "]]");
    ctx = ObjExpr::sub(ctx, l, r);
  }
  return ctx;
}

std::string Context::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? ", " : "") + vars_[i].name + ":" + vars_[i].type.to_string();
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    s += (i ? ", " : " | ") + constraints_[i].lhs.to_string() + " = " + constraints_[i].rhs.to_string();
  return s;
}

ObjExpr typecheck(const Term& t, const Context& C, const std::optional<ObjExpr>& expected) {
  return elab(t, C.unconstrained(), expected).type;
}

Arrow interpret(const Term& t, const Context& C, const std::optional<ObjExpr>& expected) {
  Elab e = elab(t, C.unconstrained(), expected);
  return setmodel::restrict(e.arrow, C.carrier());
}

setmodel::Equality terms_equal(const Term& t1, const Term& t2, const Context& C, const Budget& budget) {
  auto [a, b] = elab_pair(t1, t2, C.unconstrained());
  if (!(a.type == b.type))
    throw TypeError("cannot compare `" + t1.to_string() + "` : " + a.type.to_string() + " with `" + t2.to_string() +
                    "` : " + b.type.to_string());
  ObjExpr carrier = C.carrier();
  return setmodel::arrows_equal(setmodel::restrict(a.arrow, carrier), setmodel::restrict(b.arrow, carrier), budget);
}

std::vector<std::string> free_vars(const Term& t, const Context& C) {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.kind() == Term::Kind::var) {
      if (C.index_of(u.name()) && std::find(out.begin(), out.end(), u.name()) == out.end()) out.push_back(u.name());
      return;
    }
    for (const auto& a : u.args()) walk(a);
  };
  walk(t);
  return out;
}

Term substitute(const Term& t, const Subst& sigma, const Context& src, const Context& tgt, const Budget& budget) {
  for (const auto& v : src.vars()) {
    auto it = sigma.find(v.name);
    if (it == sigma.end()) throw TypeError("substitution has no image for `" + v.name + "`");
    ObjExpr got = typecheck(it->second, tgt, v.type);
    if (!(got == v.type))
      throw TypeError("`" + it->second.to_string() + "` has type " + got.to_string() + " but `" + v.name +
                      "` needs " + v.type.to_string());
  }
  for (const auto& c : src.constraints()) {
    Term l = replace(c.lhs, sigma, src);
    Term r = replace(c.rhs, sigma, src);
    auto eq = terms_equal(l, r, tgt, budget);
    if (!eq.equal) {
      const Elem& w = *eq.counterexample;
      Arrow il = interpret(l, tgt);
      Arrow ir = interpret(r, tgt, il.cod());
      std::string images;
      for (const auto& v : src.vars()) images += (images.empty() ? "" : ", ") + v.name + " := " + sigma.at(v.name).to_string();
      throw ConstraintError("constraint " + c.lhs.to_string() + " = " + c.rhs.to_string() + " fails under " + images + ": " +
                                l.to_string() + " is " + setmodel::render(il(w), il.cod()) + ", " + r.to_string() +
                                " is " + setmodel::render(ir(w), ir.cod()),
                            setmodel::render(w, tgt.carrier()));
    }
  }
  return replace(t, sigma, src);
}

Arrow interpret_subst(const Subst& sigma, const Context& src, const Context& tgt) {
  std::vector<Arrow> parts;
  for (const auto& v : src.vars()) parts.push_back(interpret(sigma.at(v.name), tgt, v.type));
  if (parts.empty()) return setmodel::terminal_map(tgt.carrier());
  return pairing(parts);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, s] : signatures()) out.push_back(n);
    return out;
  }();
  return names;
}

}  // namespace polylist::lang
