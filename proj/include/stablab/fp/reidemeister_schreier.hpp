#pragma once

#include <vector>

#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::fp {

struct SubgroupPresentation {
  Presentation presentation;
  // Each Schreier generator as a word in the ambient generators.
  std::vector<Word> generator_words;
  // Schreier transversal: coset -> representative word.
  std::vector<Word> transversal;
};

// Presentation of the subgroup whose coset action is `ct` on the Schreier
// generators. Throws NotClosed if the table is incomplete or not transitive.
SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& ct);

}  // namespace stablab::fp
