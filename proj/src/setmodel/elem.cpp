#include "polylist/setmodel/elem.hpp"

#include "polylist/errors.hpp"

#include <sstream>

namespace polylist::setmodel {

Elem Elem::num(Natural n) {
  if (n < 0) throw StructuralError("natural numbers cannot be negative");
  Elem e;
  e.kind_ = Kind::num;
  e.num_ = std::move(n);
  return e;
}

Elem Elem::tup(std::vector<Elem> items) {
  Elem e;
  e.kind_ = Kind::tup;
  e.items_ = std::move(items);
  return e;
}

Elem Elem::seq(std::vector<Elem> items) {
  Elem e;
  e.kind_ = Kind::seq;
  e.items_ = std::move(items);
  return e;
}

const Natural& Elem::as_num() const {
  if (kind_ != Kind::num) throw StructuralError("expected a number, got " + to_string());
  return num_;
}

std::uint64_t Elem::as_u64() const {
  const Natural& n = as_num();
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw StructuralError("number too large for a machine word: " + to_string());
  return static_cast<std::uint64_t>(n);
}

const std::vector<Elem>& Elem::items() const {
  if (kind_ != Kind::tup && kind_ != Kind::seq)
    throw StructuralError("expected a tuple or sequence, got " + to_string());
  return items_;
}

const Elem& Elem::at(std::size_t i) const {
  const auto& xs = items();
  if (i >= xs.size())
    throw StructuralError("component " + std::to_string(i) + " out of range in " + to_string());
  return xs[i];
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Elem::Kind::star:
      return true;
    case Elem::Kind::num:
      return a.num_ == b.num_;
    default:
      return a.items_ == b.items_;
  }
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Elem::Kind::star:
      return std::strong_ordering::equal;
    case Elem::Kind::num:
      if (a.num_ < b.num_) return std::strong_ordering::less;
      if (b.num_ < a.num_) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    default:
      break;
  }
  // shorter sequences first, then lexicographic: matches enumeration order
  if (a.items_.size() != b.items_.size()) return a.items_.size() <=> b.items_.size();
  for (std::size_t i = 0; i < a.items_.size(); ++i) {
    auto c = a.items_[i] <=> b.items_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Elem::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::star:
      return os << '*';
    case Elem::Kind::num:
      return os << e.as_num();
    case Elem::Kind::tup:
    case Elem::Kind::seq: {
      os << (e.is_tup() ? '(' : '[');
      bool first = true;
      for (const auto& x : e.items()) {
        if (!first) os << ',';
        first = false;
        os << x;
      }
      return os << (e.is_tup() ? ')' : ']');
    }
  }
  return os;
}

}  // namespace polylist::setmodel
