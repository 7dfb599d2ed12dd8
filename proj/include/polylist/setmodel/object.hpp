#pragma once

#include "polylist/setmodel/elem.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace polylist::setmodel {

class Arrow;

/// Syntactic object of the set model.
///
/// `Fin` is a finite discrete object whose elements are the numbers
/// 0..k-1; it carries display names for those elements. `Sub` is the
/// equalizer of two parallel arrows out of its base: its elements are the
/// base elements on which both arrows agree.
class ObjExpr {
 public:
  enum class Kind : std::uint8_t { unit, nat, fin, list, prod, sub };

  ObjExpr();  // the terminal object

  static ObjExpr unit();
  static ObjExpr nat();
  static ObjExpr fin(std::vector<std::string> names);
  static ObjExpr list_of(ObjExpr elem);
  /// Nullary products collapse to `unit`, unary ones to the component.
  static ObjExpr prod(std::vector<ObjExpr> components);
  /// Requires lhs and rhs to be parallel arrows out of `base`.
  static ObjExpr sub(ObjExpr base, Arrow lhs, Arrow rhs);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  const std::vector<std::string>& names() const;       // fin
  std::size_t fin_size() const { return names().size(); }
  const ObjExpr& element() const;                       // list
  const std::vector<ObjExpr>& components() const;       // prod
  const ObjExpr& base() const;                          // sub
  const Arrow& lhs() const;                             // sub
  const Arrow& rhs() const;                             // sub

  /// Strips every enclosing `Sub`.
  const ObjExpr& carrier() const;
  /// True when `other` is reached from this object by following `Sub` bases
  /// (including this object itself).
  bool is_subobject_of(const ObjExpr& other) const;

  /// Components an arrow out of this object expects: [] for unit, the
  /// components of a product, otherwise the object itself. Subs of products
  /// are looked through.
  std::vector<ObjExpr> argument_types() const;

  std::string to_string() const;

  friend bool operator==(const ObjExpr& a, const ObjExpr& b);

 private:
  struct Node;
  explicit ObjExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A total computable map between objects.
class Arrow {
 public:
  using Fn = std::function<Elem(const Elem&)>;

  Arrow(ObjExpr dom, ObjExpr cod, Fn fn, std::string label = {});

  const ObjExpr& dom() const noexcept { return dom_; }
  const ObjExpr& cod() const noexcept { return cod_; }
  const std::string& label() const noexcept { return label_; }

  Elem operator()(const Elem& e) const { return (*fn_)(e); }
  Elem apply(const Elem& e) const { return (*fn_)(e); }

  /// Same function with a different domain (used for restriction along Sub
  /// inclusions, which are identities on representations).
  Arrow with_dom(ObjExpr dom) const;
  Arrow with_cod(ObjExpr cod) const;
  Arrow relabel(std::string label) const;

  /// Identity of the underlying function, or equality of non-empty labels
  /// together with equal domain and codomain. Used for comparing Sub objects.
  bool same_as(const Arrow& other) const;

  std::string name() const { return label_.empty() ? std::string("<arrow>") : label_; }

 private:
  ObjExpr dom_;
  ObjExpr cod_;
  std::shared_ptr<const Fn> fn_;
  std::string label_;
};

/// Fin object with k elements named a, b, c, ... (x26, x27, ... past z).
ObjExpr letters(std::size_t k);

/// Explicit enumeration budget; every bounded check reports the budget used.
struct Budget {
  std::uint64_t nat_max = 4;
  std::uint64_t len_max = 3;
  std::uint64_t card_cap = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;

  std::string to_string() const;
};

}  // namespace polylist::setmodel
