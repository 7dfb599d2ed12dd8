#pragma once

#include "polylist/listobj/lists.hpp"
#include "polylist/setmodel/report.hpp"

#include <cstddef>

namespace polylist::listobj {

struct ListLawOptions {
  std::size_t naturality_samples = 100;  // random f per naturality law
  std::size_t sequence_samples = 32;     // random (f, p) per Seq/List law
};

/// List-law suite over X = letters(card_x).
///
/// Checks the recursor equations behind every list arrow, the coproduct
/// shape of L(X), the len/tr/tail/zerothDef/nthDef properties, concat and
/// Seq/List identities, the tail-expansion and H/A recurrences, extensional
/// list equality, and naturality in X for seeded random f : X -> Y.
setmodel::LawReport run_list_laws(const Budget& budget, std::size_t card_x, const ListLawOptions& opt = {});

/// Same suite evaluated through the given arrows (for mutants).
setmodel::LawReport run_list_laws(const Budget& budget, const ListOps& ops, const ListLawOptions& opt = {});

}  // namespace polylist::listobj
