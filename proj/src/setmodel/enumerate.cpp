#include "polylist/setmodel/enumerate.hpp"

#include "polylist/errors.hpp"

namespace polylist::setmodel {

namespace {

// Lexicographic tuples over `pools`, first pool most significant. Calls
// `emit` for each; stops early when emit returns false.
template <class Emit>
void odometer(const std::vector<const std::vector<Elem>*>& pools, Emit&& emit) {
  for (const auto* p : pools)
    if (p->empty()) return;
  std::vector<std::size_t> idx(pools.size(), 0);
  while (true) {
    std::vector<Elem> items;
    items.reserve(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) items.push_back((*pools[i])[idx[i]]);
    if (!emit(std::move(items))) return;
    std::size_t pos = pools.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pools[pos]->size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (pools.empty()) return;
  }
}

}  // namespace

Enumeration enumerate(const ObjExpr& obj, const Budget& budget) {
  Enumeration out;
  const std::uint64_t cap = budget.card_cap;
  auto full = [&] {
    if (out.elems.size() >= cap) {
      out.truncated = true;
      return true;
    }
    return false;
  };

  switch (obj.kind()) {
    case ObjExpr::Kind::unit:
      if (!full()) out.elems.push_back(Elem::star());
      break;
    case ObjExpr::Kind::nat:
      for (std::uint64_t n = 0; n <= budget.nat_max; ++n) {
        if (full()) break;
        out.elems.push_back(Elem::num(n));
      }
      break;
    case ObjExpr::Kind::fin:
      for (std::uint64_t n = 0; n < obj.fin_size(); ++n) {
        if (full()) break;
        out.elems.push_back(Elem::num(n));
      }
      break;
    case ObjExpr::Kind::list: {
      Enumeration xs = enumerate(obj.element(), budget);
      out.truncated = xs.truncated;
      for (std::uint64_t len = 0; len <= budget.len_max; ++len) {
        if (len > 0 && xs.elems.empty()) break;
        std::vector<const std::vector<Elem>*> pools(len, &xs.elems);
        bool stopped = false;
        odometer(pools, [&](std::vector<Elem> items) {
          if (full()) {
            stopped = true;
            return false;
          }
          out.elems.push_back(Elem::seq(std::move(items)));
          return true;
        });
        if (stopped) break;
      }
      break;
    }
    case ObjExpr::Kind::prod: {
      std::vector<Enumeration> parts;
      for (const auto& c : obj.components()) {
        parts.push_back(enumerate(c, budget));
        out.truncated = out.truncated || parts.back().truncated;
      }
      std::vector<const std::vector<Elem>*> pools;
      for (const auto& p : parts) pools.push_back(&p.elems);
      odometer(pools, [&](std::vector<Elem> items) {
        if (full()) return false;
        out.elems.push_back(Elem::tup(std::move(items)));
        return true;
      });
      break;
    }
    case ObjExpr::Kind::sub: {
      Enumeration base = enumerate(obj.base(), budget);
      out.truncated = base.truncated;
      for (auto& e : base.elems)
        if (obj.lhs()(e) == obj.rhs()(e)) out.elems.push_back(std::move(e));
      break;
    }
  }
  return out;
}

bool elem_has_type(const Elem& e, const ObjExpr& obj) {
  switch (obj.kind()) {
    case ObjExpr::Kind::unit:
      return e.is_star();
    case ObjExpr::Kind::nat:
      return e.is_num();
    case ObjExpr::Kind::fin:
      return e.is_num() && e.as_num() < obj.fin_size();
    case ObjExpr::Kind::list:
      if (!e.is_seq()) return false;
      for (const auto& x : e.items())
        if (!elem_has_type(x, obj.element())) return false;
      return true;
    case ObjExpr::Kind::prod: {
      const auto& cs = obj.components();
      if (!e.is_tup() || e.size() != cs.size()) return false;
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (!elem_has_type(e.items()[i], cs[i])) return false;
      return true;
    }
    case ObjExpr::Kind::sub:
      return elem_has_type(e, obj.base()) && obj.lhs()(e) == obj.rhs()(e);
  }
  return false;
}

std::string render(const Elem& e, const ObjExpr& obj) {
  const ObjExpr& o = obj.carrier();
  switch (o.kind()) {
    case ObjExpr::Kind::fin:
      if (e.is_num() && e.as_num() < o.fin_size()) return o.names()[e.as_u64()];
      break;
    case ObjExpr::Kind::list:
      if (e.is_seq()) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i) s += ",";
          s += render(e.items()[i], o.element());
        }
        return s + "]";
      }
      break;
    case ObjExpr::Kind::prod:
      if (e.is_tup() && e.size() == o.components().size()) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i) s += ",";
          s += render(e.items()[i], o.components()[i]);
        }
        return s + ")";
      }
      break;
    default:
      break;
  }
  return e.to_string();
}

}  // namespace polylist::setmodel
