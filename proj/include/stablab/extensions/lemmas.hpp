#pragma once

#include <json.hpp>
#include <string>

#include "stablab/fp/group_table.hpp"
#include "stablab/homology/coefficients.hpp"

namespace stablab::extensions {

/// h o tg_{pi_0} = id on Hom(H_2, k) for a Schur covering pi_0, and
/// H^2(G, k) = im(tg_{pi_0}) + Ext(G_ab, k) as an internal direct sum.
struct SplitReport {
  std::string coefficients;
  long long hom_order = 0, h2_order = 0, ext_order = 0;
  long long identity_checked = 0, identity_failures = 0;
  long long tg_image_order = 0, intersection_order = 0, sum_order = 0;
  bool direct_sum = false;
  bool passed() const { return identity_failures == 0 && direct_sum; }
};
SplitReport split_identity_check(fp::GroupPtr g, const homology::CoefficientModule& k);

/// For every class p of H^2(G, k): tg of the extension H_2 -> G^G -> [G,G]
/// applied to h(p) equals the restriction of p to [G,G].
struct LemmaIReport {
  std::string coefficients;
  long long classes_checked = 0, failures = 0;
  long long h2_order = 0, derived_h2_order = 0;
  long long nonzero_restrictions = 0;
  bool passed() const { return failures == 0 && classes_checked == h2_order; }
};
LemmaIReport lemma_i_check(fp::GroupPtr g, const homology::CoefficientModule& k);

nlohmann::json to_json(const SplitReport& r);
nlohmann::json to_json(const LemmaIReport& r);

}  // namespace stablab::extensions
