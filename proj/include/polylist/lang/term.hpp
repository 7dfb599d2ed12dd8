#pragma once

#include "polylist/setmodel/category.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polylist::lang {

using setmodel::Arrow;
using setmodel::Budget;
using setmodel::Elem;
using setmodel::ObjExpr;

/// Term of the internal language. A call names either a builtin or carries an
/// explicit arrow; bare identifiers are variables until typechecking resolves
/// them (context variable, nullary builtin, or element of a named set).
class Term {
 public:
  enum class Kind { var, app, tuple };

  static Term var(std::string name);
  static Term app(std::string callee, std::vector<Term> args);
  static Term app(Arrow callee, std::vector<Term> args);
  static Term tuple(std::vector<Term> items);

  Kind kind() const { return kind_; }
  /// Variable name, or the callee's name (an arrow callee reports its label).
  const std::string& name() const { return name_; }
  const std::optional<Arrow>& arrow() const { return arrow_; }
  const std::vector<Term>& args() const { return args_; }

  /// Concrete syntax; numerals and list literals are re-sugared.
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::var;
  std::string name_;
  std::optional<Arrow> arrow_;
  std::vector<Term> args_;
};

/// Named finite objects visible to types and terms (e.g. X = {a,b,c}).
struct Scope {
  std::vector<std::pair<std::string, ObjExpr>> sets;

  const ObjExpr* find_set(const std::string& name) const;
  /// The set and index of an element name, searching sets in order.
  std::optional<std::pair<ObjExpr, std::uint64_t>> find_atom(const std::string& name) const;
};

struct Binding {
  std::string name;
  ObjExpr type;
};

struct Constraint {
  Term lhs;
  Term rhs;
};

/// Variables plus equations restricting them. The carrier is the product of
/// the variable types, cut down by one nested Sub per constraint.
class Context {
 public:
  Context() = default;
  explicit Context(Scope scope) : scope_(std::move(scope)) {}

  /// TypeError on a duplicate name.
  Context& bind(std::string name, ObjExpr type);
  /// Both sides are typed in the unconstrained context and must agree.
  Context& constrain(Term lhs, Term rhs);

  const std::vector<Binding>& vars() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Scope& scope() const { return scope_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Product of the variable types (unit when there are none).
  ObjExpr base() const;
  /// base() restricted by every constraint.
  ObjExpr carrier() const;
  /// Same variables and scope, no constraints.
  Context unconstrained() const;

  std::string to_string() const;

 private:
  Scope scope_;
  std::vector<Binding> vars_;
  std::vector<Constraint> constraints_;
};

/// Type of t in C, using `expected` to resolve element types (nil needs it).
/// TypeError naming the offending subterm on failure.
ObjExpr typecheck(const Term& t, const Context& C, const std::optional<ObjExpr>& expected = std::nullopt);

/// [t]_C : carrier(C) -> type(t).
Arrow interpret(const Term& t, const Context& C, const std::optional<ObjExpr>& expected = std::nullopt);

/// t1 =_C t2 by bounded extensional equality of the interpretations.
setmodel::Equality terms_equal(const Term& t1, const Term& t2, const Context& C, const Budget& budget);

using Subst = std::map<std::string, Term>;

std::vector<std::string> free_vars(const Term& t, const Context& C);

/// Replaces the variables of `src` in t by their images, typed in `tgt`.
/// Every replacement must have its variable's type, and the constraints of
/// `src`, after substitution, must hold in `tgt` (ConstraintError with the
/// witness otherwise).
Term substitute(const Term& t, const Subst& sigma, const Context& src, const Context& tgt, const Budget& budget);

/// <[sigma(x1)], ..., [sigma(xn)]> : carrier(tgt) -> base(src).
Arrow interpret_subst(const Subst& sigma, const Context& src, const Context& tgt);

/// Builtin names understood by typecheck.
const std::vector<std::string>& builtin_names();

}  // namespace polylist::lang
