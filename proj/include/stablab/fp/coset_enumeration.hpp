#pragma once

#include <cstdint>
#include <vector>

#include "stablab/fp/group_table.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::fp {

/// A complete, standardized coset table: coset 0 is the subgroup itself and
/// cosets are numbered in breadth-first order of first appearance.
struct CosetTable {
  std::size_t num_cosets = 0;
  std::size_t num_generators = 0;
  std::vector<std::uint32_t> table;  // num_cosets x (2 * num_generators), column per Letter::column()

  std::size_t columns() const { return 2 * num_generators; }
  std::uint32_t act(std::size_t coset, std::size_t column) const { return table[coset * columns() + column]; }
  std::uint32_t act(std::size_t coset, const Word& w) const;
};

inline constexpr std::size_t kDefaultMaxCosets = 1u << 21;
inline constexpr std::size_t kMaxGroupOrder = 4096;

// Felsch-style Todd-Coxeter. Throws EnumerationOverflow when the number of live
// cosets would exceed max_cosets.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words,
                           std::size_t max_cosets = kDefaultMaxCosets);

// Enumerates over the trivial subgroup and builds the multiplication table.
// Throws CapExceeded if the group is larger than max_order.
GroupTable enumerate_group(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                           std::size_t max_order = kMaxGroupOrder);

// Regular coset table of a group table (trivial subgroup) with respect to the
// given generator images, or of the right cosets of a subgroup.
CosetTable coset_table_of(const GroupTable& g, const std::vector<Element>& generator_images,
                          const std::vector<Element>& subgroup = {0});

}  // namespace stablab::fp
