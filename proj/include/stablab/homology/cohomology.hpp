#pragma once

#include <json.hpp>
#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/group_table.hpp"
#include "stablab/homology/coefficients.hpp"

namespace stablab::homology {

using fp::AVec;

/// H^d(G, k) with trivial action. For finite k, value holds the group and the
/// representatives are normalized cocycle tables over G^d, one per invariant
/// factor. Over Q only the dimension is meaningful.
struct CohomologyGroup {
  int degree = 0;
  CoefficientModule module;
  fp::AbelianGroup value;
  std::size_t dimension = 0;  // over a field; rank of value otherwise
  std::vector<std::vector<AVec>> representatives;
};

// degree 0..3; throws CapExceeded when the bar complex is too large.
CohomologyGroup cohomology(const fp::GroupTable& g, const CoefficientModule& m, int degree);

// Exhaustive check of the cocycle condition for a normalized table over G^d.
bool is_bar_cocycle(const fp::GroupTable& g, const fp::AbelianGroup& k, int degree,
                    const std::vector<AVec>& table);

nlohmann::json to_json(const CohomologyGroup& h);

}  // namespace stablab::homology
