#pragma once

#include <random>
#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/group_table.hpp"
#include "stablab/homology/cochain.hpp"
#include "stablab/homology/relation_module.hpp"

namespace stablab::extensions {

using fp::AVec;
using fp::Element;
using homology::Cocycle2;

// The table of a finite abelian group; element i is a.element_at(i).
fp::GroupTable abelian_table(const fp::AbelianGroup& a);

/// 1 -> A -> L -> Gamma -> 1 with A central. Kernel elements are indexed as in
/// AbelianGroup::index_of. The section picks the least element of each fibre and
/// the cocycle is c(x,y) = s(x)s(y)s(xy)^-1 read in A.
struct CentralExtension {
  fp::GroupPtr total;
  fp::GroupPtr base;
  fp::AbelianGroup kernel;
  std::vector<Element> projection;
  std::vector<Element> kernel_embedding;
  std::vector<long> kernel_index;  // L -> kernel index or -1
  std::vector<Element> section;
  Cocycle2 cocycle;

  Element embed(const AVec& a) const { return kernel_embedding[static_cast<std::size_t>(kernel.index_of(a))]; }
  AVec kernel_coords(Element l) const;  // throws unless l lies in the kernel
};

// Total group on pairs (g, a), index g |A| + index_of(a), with
// (g,a)(g',a') = (gg', a + a' + c(g,g')).
CentralExtension extension_from_cocycle(const Cocycle2& c);

// Validates the data (projection a surjective homomorphism, embedding an
// injective homomorphism onto its kernel) and throws NotCentral when the
// kernel is not central.
CentralExtension make_extension(fp::GroupPtr total, fp::GroupPtr base, const fp::AbelianGroup& kernel,
                                std::vector<Element> projection, std::vector<Element> kernel_embedding);

// L -> L/N for a subgroup N of the center.
CentralExtension central_quotient(fp::GroupPtr total, const std::vector<Element>& central_subgroup);

Cocycle2 cocycle_from_extension(const CentralExtension& e, const std::vector<Element>& section);
std::vector<Element> random_section(const CentralExtension& e, std::mt19937_64& rng);

struct Pushforward {
  CentralExtension extension;       // extension_from_cocycle(beta o c)
  std::vector<Element> total_map;   // L -> L^beta
  std::vector<Element> kernel_map;  // k -> L^beta
  bool diagram_commutes = false;
};
Pushforward pushforward(const CentralExtension& e, const fp::AbelianHom& beta);

// (L x k) / graph(-beta), built directly as a quotient group.
CentralExtension pushforward_quotient(const CentralExtension& e, const fp::AbelianHom& beta);

/// tg: Hom(A, k) -> H^2(Gamma, k), beta -> [beta o c].
class Transgression {
 public:
  Transgression(const CentralExtension& e, const fp::AbelianGroup& k);
  Transgression(const CentralExtension& e, std::shared_ptr<const homology::H2Classifier> classifier);

  const fp::HomGroup& hom() const { return hom_; }
  const fp::AbelianGroup& h2() const { return cls_->group(); }
  const homology::H2Classifier& classifier() const { return *cls_; }
  AVec apply(const AVec& beta) const { return apply(hom_.hom(beta)); }
  AVec apply(const fp::AbelianHom& beta) const;
  // Images of the basis of Hom(A, k).
  std::vector<AVec> matrix() const;

 private:
  Cocycle2 c_;
  std::shared_ptr<const homology::H2Classifier> cls_;
  fp::HomGroup hom_;
};

// Coboundary test by enumerating every normalized 1-cochain when there are at
// most kExhaustiveCoboundaryLimit of them, by Smith form otherwise.
inline constexpr double kExhaustiveCoboundaryLimit = 65536.0;
bool is_coboundary(const Cocycle2& c);
bool cohomologous(const Cocycle2& a, const Cocycle2& b);

}  // namespace stablab::extensions
