#pragma once

#include <memory>
#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/presentation.hpp"
#include "stablab/homology/cochain.hpp"
#include "stablab/homology/cocycle_quotient.hpp"

namespace stablab::homology {

/// For a finite group G = F/R with F free on a list X of elements of G, the
/// abelian group M = R/[F,R] on the Schreier generators of R. Its torsion is
/// H_2(G, Z) (Hopf); its free part has rank |X|.
class RelationModule {
 public:
  RelationModule(fp::GroupPtr g, std::vector<Element> generators);
  explicit RelationModule(fp::GroupPtr g);

  const fp::GroupTable& group() const { return *g_; }
  fp::GroupPtr group_ptr() const { return g_; }
  const std::vector<Element>& generators() const { return x_; }
  const std::vector<fp::Word>& transversal() const { return t_; }
  std::size_t num_schreier() const { return words_.size(); }
  // Schreier generator on the edge g --x_j--> g x_j, or -1 on tree edges.
  long schreier_index(Element g, std::size_t j) const { return id_[g * x_.size() + j]; }
  const fp::Word& schreier_word(std::size_t s) const { return words_[s]; }

  // Sum of Schreier generators crossed by the path reading w from `start`.
  std::vector<long> rewrite(Element start, const fp::Word& w) const;

  const fp::Cokernel& module() const { return m_; }
  // Row s: exponent sums of Schreier generator s over X.
  const std::vector<std::vector<long>>& exponent_matrix() const { return j_; }

  const fp::AbelianGroup& h2() const { return h2_; }
  std::size_t torsion_count() const { return h2_.rank(); }
  // A vector over the Schreier generators representing an element of H_2.
  std::vector<long> h2_lift(const AVec& a) const;
  AVec h2_coords(const std::vector<long>& z) const;  // z must lie in the torsion

 private:
  void build();

  fp::GroupPtr g_;
  std::vector<Element> x_;
  std::vector<fp::Word> t_;
  std::vector<long> id_;
  std::vector<fp::Word> words_;
  std::vector<std::vector<long>> j_;
  fp::Cokernel m_;
  fp::AbelianGroup h2_;
};

/// H^2(G, k) for finite k with trivial action, as coker(Hom(F,k) -> Hom(M,k)).
/// Classes have coordinates in group(); classify and representative are
/// mutually inverse on classes.
class H2Classifier {
 public:
  H2Classifier(std::shared_ptr<const RelationModule> rm, const fp::AbelianGroup& k);
  H2Classifier(fp::GroupPtr g, const fp::AbelianGroup& k);

  const fp::AbelianGroup& group() const { return q_.group(); }
  const fp::AbelianGroup& coefficients() const { return k_; }
  const RelationModule& relation_module() const { return *rm_; }

  AVec classify(const Cocycle2& f) const;
  Cocycle2 representative(const AVec& cls) const;
  bool cohomologous(const Cocycle2& a, const Cocycle2& b) const;

  // The universal-coefficient projection H^2(G,k) -> Hom(H_2(G), k).
  fp::AbelianHom to_hom(const AVec& cls) const;

  // Hom(M, k) values on the Schreier generators for a cocycle, per factor of k.
  std::vector<std::vector<long>> phi(const Cocycle2& f) const;
  // The cocycle read off from values on the Schreier generators (inverse of phi
  // on classes).
  Cocycle2 cocycle_from_phi(const std::vector<std::vector<long>>& v) const;

 private:
  std::shared_ptr<const RelationModule> rm_;
  fp::AbelianGroup k_;
  CocycleQuotient q_;
};

// Schur multiplier H_2(G, Z) through the relation module on the presentation's
// generator images.
fp::AbelianGroup schur_multiplier(const fp::Presentation& p, const fp::GroupTable& g);

}  // namespace stablab::homology
