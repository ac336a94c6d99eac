#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stablab/fp/word.hpp"

namespace stablab::fp {

/// A finite presentation <S | R>. Relators are stored freely reduced and every
/// generator index they use is in range; the constructor enforces both.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t num_generators() const { return generator_names_.size(); }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Word>& relators() const { return relators_; }

  Presentation with_relators(std::vector<Word> extra) const;
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
};

// Text format:
//   group <name>
//   gens <id> <id> ...
//   rel <word>          (one per relator)
// Words: whitespace-separated factors `id`, `id^k`, `( word )^k`, `[x,y]`.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

// Parses a word against known generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& generator_names);

}  // namespace stablab::fp
