#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace polylist::setmodel {

/// Arbitrary-precision natural number. Values are never negative.
using Natural = boost::multiprecision::cpp_int;

/// An element of some object of the set model.
///
/// Elements are untyped values: the object they belong to is carried
/// separately. Elements of a subobject are represented by their underlying
/// element, and elements of a finite object `Fin` are numbers.
class Elem {
 public:
  enum class Kind : std::uint8_t { star, num, tup, seq };

  Elem() = default;  // the star

  static Elem star() { return Elem{}; }
  static Elem num(Natural n);
  static Elem num(std::uint64_t n) { return num(Natural{n}); }
  static Elem tup(std::vector<Elem> items);
  static Elem tup(std::initializer_list<Elem> items) { return tup(std::vector<Elem>(items)); }
  static Elem seq(std::vector<Elem> items);
  static Elem seq(std::initializer_list<Elem> items) { return seq(std::vector<Elem>(items)); }

  Kind kind() const noexcept { return kind_; }
  bool is_star() const noexcept { return kind_ == Kind::star; }
  bool is_num() const noexcept { return kind_ == Kind::num; }
  bool is_tup() const noexcept { return kind_ == Kind::tup; }
  bool is_seq() const noexcept { return kind_ == Kind::seq; }

  /// Throws StructuralError when the element is not a number.
  const Natural& as_num() const;
  /// Number as a machine word; throws when it is not a number or too large.
  std::uint64_t as_u64() const;
  /// Components of a tuple or entries of a sequence.
  const std::vector<Elem>& items() const;
  /// Component i of a tuple, bounds-checked.
  const Elem& at(std::size_t i) const;
  std::size_t size() const noexcept { return items_.size(); }

  friend bool operator==(const Elem& a, const Elem& b);
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);

  /// Plain rendering: `*`, decimal numbers, `(a,b)`, `[a,b]`.
  std::string to_string() const;

 private:
  Kind kind_ = Kind::star;
  Natural num_;
  std::vector<Elem> items_;
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

}  // namespace polylist::setmodel
