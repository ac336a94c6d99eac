#pragma once

#include <vector>

#include "stablab/fp/presentation.hpp"

namespace stablab::fp {

struct TietzeResult {
  Presentation presentation;
  // Image of every generator of the input presentation as a word in the
  // generators of the simplified one.
  std::vector<Word> generator_images;
};

// Removes trivial and duplicate relators and eliminates generators through
// relators of length 1 and 2, then through short relators in which a generator
// occurs once, as long as the total relator length does not grow by more than
// max_growth letters per elimination.
TietzeResult tietze_simplify(const Presentation& p, long max_growth = 0);

}  // namespace stablab::fp
