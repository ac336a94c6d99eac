#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "stablab/extensions/extension_file.hpp"
#include "stablab/fp/group_table.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::cli {

inline constexpr int kSchemaVersion = 1;

struct CatalogGroup {
  std::string name;  // file stem
  fp::Presentation presentation;
  fp::GroupPtr table;
};
struct CatalogExtension {
  std::string name;
  extensions::ExtensionSpec spec;
};

// data/groups/*.grp and data/extensions/*.ext, sorted by file name.
std::vector<CatalogGroup> group_catalog(std::size_t max_order = 4096);
std::vector<CatalogExtension> extension_catalog();
// An existing path, else the file name looked up under data/<subdir>.
std::string find_data_file(const std::string& path, const std::string& subdir);

// One JSON object per case, sorted by case name, plus a verdict.
struct VerifyResult {
  nlohmann::json document;
  bool passed = false;
};
inline const std::vector<std::string> kSuites = {"miller", "split", "lemma-i", "five-term", "spectral", "all"};
VerifyResult verify(const std::string& suite, std::size_t max_order);

// Parses argv, writes one JSON document to out. Exit codes: 0 success,
// 1 computation error or failed check, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace stablab::cli
