#include "stablab/fp/presentation.hpp"

#include "stablab/error.hpp"

namespace stablab::fp {

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           std::string name)
    : name_(std::move(name)), generator_names_(std::move(generator_names)) {
  for (Word& r : relators) {
    for (const Letter& l : r) {
      if (l.generator >= generator_names_.size()) {
        throw InvalidArgument("relator uses generator index " + std::to_string(l.generator) +
                              " but only " + std::to_string(generator_names_.size()) +
                              " generators exist");
      }
    }
    relators_.push_back(std::move(r));
  }
}

Presentation Presentation::with_relators(std::vector<Word> extra) const {
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(generator_names_, std::move(rels), name_);
}

std::string Presentation::to_text() const {
  std::string out = "group " + (name_.empty() ? std::string("G") : name_) + "\ngens";
  for (const auto& g : generator_names_) out += " " + g;
  out += "\n";
  for (const auto& r : relators_) out += "rel " + to_string(r, generator_names_) + "\n";
  return out;
}

}  // namespace stablab::fp
