#pragma once

#include <memory>
#include <string>

#include "stablab/extensions/extension_file.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/fp/presentation.hpp"

namespace testutil {

inline stablab::fp::Presentation group_presentation(const std::string& name) {
  return stablab::fp::load_presentation(std::string(STABLAB_DATA_DIR) + "/groups/" + name + ".grp");
}

inline stablab::fp::GroupPtr group(const std::string& name) {
  return std::make_shared<const stablab::fp::GroupTable>(stablab::fp::enumerate_group(group_presentation(name)));
}

inline stablab::extensions::CentralExtension extension(const std::string& name) {
  return stablab::extensions::realize(
      stablab::extensions::load_extension_file(std::string(STABLAB_DATA_DIR) + "/extensions/" + name + ".ext"));
}

inline stablab::fp::AbelianGroup ab(std::initializer_list<long> orders) {
  return stablab::fp::AbelianGroup::from_cyclic_orders(orders);
}

}  // namespace testutil
