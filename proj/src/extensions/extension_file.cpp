#include "stablab/extensions/extension_file.hpp"

#include <fstream>
#include <sstream>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"

namespace stablab::extensions {

ExtensionSpec parse_extension(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::ostringstream pres;
  std::vector<std::string> kernel_lines;
  ExtensionSpec spec;
  while (std::getline(in, line)) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (keyword == "extension") {
      std::istringstream(rest) >> spec.name;
      pres << "group " << spec.name << "\n";
    } else if (keyword == "kernel") {
      kernel_lines.push_back(rest);
    } else {
      pres << line << "\n";
    }
  }
  if (spec.name.empty()) throw ParseError("extension file needs an 'extension <name>' line");
  if (kernel_lines.empty()) throw ParseError("extension file needs at least one 'kernel <word>' line");
  spec.total = fp::parse_presentation(pres.str());
  for (const auto& k : kernel_lines) spec.kernel_words.push_back(fp::parse_word(k, spec.total.generator_names()));
  return spec;
}

ExtensionSpec load_extension_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open extension file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_extension(ss.str());
}

CentralExtension realize(const ExtensionSpec& spec) {
  auto total = std::make_shared<const fp::GroupTable>(fp::enumerate_group(spec.total));
  std::vector<Element> gens;
  for (const auto& w : spec.kernel_words) gens.push_back(total->evaluate(w));
  return central_quotient(total, fp::subgroup_closure(*total, gens));
}

}  // namespace stablab::extensions
