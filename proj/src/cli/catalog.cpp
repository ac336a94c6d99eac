#include <map>
#include <algorithm>
#include <filesystem>

#include "stablab/cli/cli.hpp"
#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"

namespace stablab::cli {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> files_with_extension(const std::string& subdir, const std::string& ext) {
  std::vector<fs::path> out;
  const fs::path dir = fs::path(STABLAB_DATA_DIR) / subdir;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CatalogGroup> group_catalog(std::size_t max_order) {
  std::vector<CatalogGroup> out;
  for (const auto& path : files_with_extension("groups", ".grp")) {
    CatalogGroup g;
    g.name = path.stem().string();
    g.presentation = fp::load_presentation(path.string());
    g.table = std::make_shared<const fp::GroupTable>(fp::enumerate_group(g.presentation));
    if (g.table->order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CatalogExtension> extension_catalog() {
  std::vector<CatalogExtension> out;
  for (const auto& path : files_with_extension("extensions", ".ext"))
    out.push_back({path.stem().string(), extensions::load_extension_file(path.string())});
  return out;
}

std::string find_data_file(const std::string& path, const std::string& subdir) {
  if (fs::exists(path)) return path;
  const fs::path candidate = fs::path(STABLAB_DATA_DIR) / subdir / path;
  if (fs::exists(candidate)) return candidate.string();
  // bare catalog names: s3 -> data/groups/s3.grp
  static const std::map<std::string, std::string> ext_of = {{"groups", ".grp"}, {"extensions", ".ext"}, {"experiments", ".cfg"}};
  if (auto it = ext_of.find(subdir); it != ext_of.end() && !fs::path(path).has_extension()) {
    const fs::path named = fs::path(STABLAB_DATA_DIR) / subdir / (path + it->second);
    if (fs::exists(named)) return named.string();
  }
  throw ParseError("no such file: " + path);
}

}  // namespace stablab::cli
