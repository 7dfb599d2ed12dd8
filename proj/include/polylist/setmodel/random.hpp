#pragma once

#include "polylist/setmodel/object.hpp"

#include <cstdint>
#include <random>

namespace polylist::setmodel {

/// The single generator every randomized check draws from. Seeded from
/// Budget::seed; draws use plain modular reduction so reports are identical
/// across standard libraries.
class LawRng {
 public:
  explicit LawRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::mt19937_64 engine_;
};

/// Random arrow dom -> cod where both are finite (Fin) objects.
Arrow random_fin_arrow(const ObjExpr& dom, const ObjExpr& cod, LawRng& rng);

/// Random arrow N*A -> X, total on all of N, for finite A and X. The value
/// at (n, a) is a fixed hash of (salt, n, a) reduced mod |X|.
Arrow random_sequence_family(const ObjExpr& A, const ObjExpr& X, LawRng& rng);

/// Random arrow A -> N with values in [0, max] for finite A.
Arrow random_length_map(const ObjExpr& A, std::uint64_t max, LawRng& rng);

}  // namespace polylist::setmodel
