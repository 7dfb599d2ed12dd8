#include "polylist/setmodel/random.hpp"

#include "polylist/errors.hpp"
#include "polylist/setmodel/category.hpp"

#include <string>

namespace polylist::setmodel {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_fin(const ObjExpr& o, const char* role) {
  if (!o.is(ObjExpr::Kind::fin))
    throw StructuralError(std::string(role) + " must be a finite object, got " + o.to_string());
}

}  // namespace

Arrow random_fin_arrow(const ObjExpr& dom, const ObjExpr& cod, LawRng& rng) {
  require_fin(dom, "domain");
  require_fin(cod, "codomain");
  if (dom.fin_size() > 0 && cod.fin_size() == 0)
    throw StructuralError("no arrow from a non-empty object into an empty one");
  std::vector<std::pair<Elem, Elem>> table;
  std::string label = "f[";
  for (std::uint64_t i = 0; i < dom.fin_size(); ++i) {
    std::uint64_t j = rng.below(cod.fin_size());
    table.emplace_back(Elem::num(i), Elem::num(j));
    label += (i ? "," : "") + cod.names()[j];
  }
  return from_table(dom, cod, std::move(table), label + "]");
}

Arrow random_sequence_family(const ObjExpr& A, const ObjExpr& X, LawRng& rng) {
  require_fin(A, "index object");
  require_fin(X, "value object");
  if (A.fin_size() > 0 && X.fin_size() == 0)
    throw StructuralError("no sequence family into an empty object over a non-empty index");
  const std::uint64_t salt = rng.next();
  const std::uint64_t k = X.fin_size();
  auto fn = [salt, k](const Elem& na) {
    std::uint64_t n = na.at(0).as_u64();
    std::uint64_t a = na.at(1).as_u64();
    return Elem::num(mix(salt ^ mix(n * 0x100000001b3ULL + a)) % k);
  };
  return Arrow(ObjExpr::prod({ObjExpr::nat(), A}), X, std::move(fn), "seqfam#" + std::to_string(salt));
}

Arrow random_length_map(const ObjExpr& A, std::uint64_t max, LawRng& rng) {
  require_fin(A, "domain");
  std::vector<std::pair<Elem, Elem>> table;
  std::string label = "p[";
  for (std::uint64_t i = 0; i < A.fin_size(); ++i) {
    std::uint64_t v = rng.below(max + 1);
    table.emplace_back(Elem::num(i), Elem::num(v));
    label += (i ? "," : "") + std::to_string(v);
  }
  return from_table(A, ObjExpr::nat(), std::move(table), label + "]");
}

}  // namespace polylist::setmodel
