#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "stablab/extensions/extension.hpp"
#include "stablab/homology/coefficients.hpp"
#include "stablab/homology/uct.hpp"

namespace stablab::extensions {

/// H^1(G, k) = Hom(G, k) with coordinates from Hom(G_ab, k).
class FirstCohomology {
 public:
  FirstCohomology(fp::GroupPtr g, const fp::AbelianGroup& k);

  const fp::AbelianGroup& group() const { return hom_.group; }
  AVec coords(const std::vector<AVec>& f) const;  // f must be a homomorphism
  std::vector<AVec> table(const AVec& c) const;

 private:
  fp::GroupPtr g_;
  fp::AbelianGroup k_;
  homology::AbelianizationMap ab_;
  fp::HomGroup hom_;
  std::vector<Element> basis_;  // an element of G over each basis vector of G_ab
};

struct NodeReport {
  std::string node;
  long long image_order = 0;   // image of the incoming map
  long long kernel_order = 0;  // kernel of the outgoing map
  bool exact = false;          // image and kernel coincide as sets
};

/// 0 -> H1(Gamma) -> H1(L) -> H1(A) -> H2(Gamma) -> H2(L) with all maps
/// evaluated on every element.
struct ExactnessReport {
  std::string coefficients;
  long long h1_base = 0, h1_total = 0, h1_kernel = 0, h2_base = 0, h2_total = 0;
  std::vector<NodeReport> nodes;
  bool exact() const;
};

ExactnessReport five_term_check(const CentralExtension& e, const homology::CoefficientModule& k);

nlohmann::json to_json(const ExactnessReport& r);

}  // namespace stablab::extensions
