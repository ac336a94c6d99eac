#pragma once

#include <json.hpp>
#include <memory>
#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/homology/coefficients.hpp"
#include "stablab/homology/relation_module.hpp"

namespace stablab::homology {

/// G -> G_ab with coordinates for every element.
struct AbelianizationMap {
  fp::AbelianGroup group;
  std::vector<AVec> coords;  // per element of G
};
AbelianizationMap abelianization_map(const fp::GroupTable& g);

/// The pieces of 0 -> Ext(G_ab, k) -> H^2(G, k) -> Hom(H_2 G, k) -> 0 for a
/// finite group and finite k, with both maps computed on cocycles.
class UniversalCoefficients {
 public:
  UniversalCoefficients(fp::GroupPtr g, const fp::AbelianGroup& k);

  const fp::AbelianGroup& ext_group() const { return ext_.group; }
  const fp::AbelianGroup& h2() const { return cls_->group(); }
  const fp::HomGroup& hom() const { return hom_; }
  const H2Classifier& classifier() const { return *cls_; }
  std::shared_ptr<const H2Classifier> classifier_ptr() const { return cls_; }
  std::shared_ptr<const RelationModule> relation_module() const { return rm_; }
  const AbelianizationMap& abelianization() const { return ab_; }

  // Carry cocycle inflated from G_ab for an element of Ext.
  Cocycle2 ext_cocycle(const AVec& e) const;
  AVec ext_map(const AVec& e) const { return cls_->classify(ext_cocycle(e)); }
  // H^2 class -> coordinates in Hom(H_2, k).
  AVec hom_map(const AVec& cls) const { return hom_.coords(cls_->to_hom(cls)); }

 private:
  fp::GroupPtr g_;
  fp::AbelianGroup k_;
  AbelianizationMap ab_;
  std::shared_ptr<const RelationModule> rm_;
  std::shared_ptr<const H2Classifier> cls_;
  fp::HomGroup hom_;
  fp::Cokernel ext_;  // raw coordinates per (factor of G_ab, factor of k)
};

struct UctSequence {
  CoefficientModule k;
  fp::AbelianGroup schur;
  fp::AbelianGroup ext_term, h2, hom_term;
  std::vector<AVec> ext_images;  // H^2 coordinates of each Ext basis vector
  std::vector<AVec> hom_images;  // Hom coordinates of each H^2 basis vector
  bool ext_injective = false;
  bool hom_surjective = false;
  bool composite_zero = false;
  bool middle_exact = false;
  bool exact() const { return ext_injective && hom_surjective && composite_zero && middle_exact; }
};

// Exactness is checked element by element for finite k; over Q every term is 0.
UctSequence uct_sequence(const fp::GroupTable& g, const CoefficientModule& k);

nlohmann::json to_json(const UctSequence& u);

}  // namespace stablab::homology
