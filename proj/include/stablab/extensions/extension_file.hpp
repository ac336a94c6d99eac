#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stablab/extensions/extension.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::extensions {

/// A central extension given by a presentation of the total group and words
/// generating a central subgroup:
///   extension <name>
///   gens a b z
///   rel ...
///   kernel z
struct ExtensionSpec {
  std::string name;
  fp::Presentation total;
  std::vector<fp::Word> kernel_words;
};

ExtensionSpec parse_extension(std::string_view text);
ExtensionSpec load_extension_file(const std::string& path);

// Enumerates the total group and takes the quotient by the kernel words.
CentralExtension realize(const ExtensionSpec& spec);

}  // namespace stablab::extensions
