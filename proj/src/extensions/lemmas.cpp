#include "stablab/extensions/lemmas.hpp"

#include <set>

#include "stablab/error.hpp"
#include "stablab/extensions/extension.hpp"
#include "stablab/extsq/exterior_square.hpp"
#include "stablab/homology/uct.hpp"

namespace stablab::extensions {

namespace {

const fp::AbelianGroup& finite_group(const homology::CoefficientModule& k) {
  if (!k.is_finite()) throw InvalidArgument("lemma checks need finite coefficients");
  return k.group;
}

}  // namespace

SplitReport split_identity_check(fp::GroupPtr g, const homology::CoefficientModule& km) {
  const fp::AbelianGroup& k = finite_group(km);
  SplitReport r;
  r.coefficients = km.to_string();
  const auto e = extsq::exterior_square(g);
  const auto cover = extsq::schur_covering(e);
  const homology::UniversalCoefficients uc(g, k);
  const Transgression tg(cover, uc.classifier_ptr());
  const auto& h2 = uc.h2();
  const auto& hom = tg.hom();
  r.hom_order = hom.group.order();
  r.h2_order = h2.order();
  r.ext_order = uc.ext_group().order();
  std::set<long long> tg_image;
  for (const AVec& beta : hom.group.elements()) {
    const AVec cls = tg.apply(beta);
    tg_image.insert(h2.index_of(cls));
    // Realize the class as an extension and read off h on it.
    const auto ext = extension_from_cocycle(uc.classifier().representative(cls));
    const AVec back = hom.coords(extsq::h_of_extension(e, ext));
    ++r.identity_checked;
    if (back != hom.group.reduce(beta)) ++r.identity_failures;
  }
  std::set<long long> ext_image;
  for (const AVec& x : uc.ext_group().elements()) ext_image.insert(h2.index_of(uc.ext_map(x)));
  std::set<long long> sum;
  for (long long a : tg_image)
    for (long long b : ext_image) {
      sum.insert(h2.index_of(h2.add(h2.element_at(a), h2.element_at(b))));
      if (a == b) ++r.intersection_order;
    }
  r.tg_image_order = static_cast<long long>(tg_image.size());
  r.sum_order = static_cast<long long>(sum.size());
  r.direct_sum = r.intersection_order == 1 && r.sum_order == r.h2_order &&
                 r.tg_image_order * static_cast<long long>(ext_image.size()) == r.h2_order;
  return r;
}

LemmaIReport lemma_i_check(fp::GroupPtr g, const homology::CoefficientModule& km) {
  const fp::AbelianGroup& k = finite_group(km);
  LemmaIReport r;
  r.coefficients = km.to_string();
  const auto e = extsq::exterior_square(g);
  const auto miller = extsq::miller_extension(e);
  const homology::H2Classifier cls_g(g, k);
  const Transgression tg(miller, k);  // Hom(H_2, k) -> H^2([G,G], k)
  const auto& cls_d = tg.classifier();
  r.h2_order = cls_g.group().order();
  r.derived_h2_order = cls_d.group().order();
  for (const AVec& p : cls_g.group().elements()) {
    const homology::Cocycle2 rep = cls_g.representative(p);
    const auto ext = extension_from_cocycle(rep);
    const AVec lhs = tg.apply(extsq::h_of_extension(e, ext));
    const AVec rhs = cls_d.classify(homology::pull_back(rep, e.derived, e.derived_embedding));
    ++r.classes_checked;
    if (!cls_d.group().is_zero(rhs)) ++r.nonzero_restrictions;
    if (lhs != rhs) ++r.failures;
  }
  return r;
}

nlohmann::json to_json(const SplitReport& r) {
  return {{"coefficients", r.coefficients},     {"hom_order", r.hom_order},
          {"h2_order", r.h2_order},             {"ext_order", r.ext_order},
          {"identity_checked", r.identity_checked}, {"identity_failures", r.identity_failures},
          {"tg_image_order", r.tg_image_order}, {"intersection_order", r.intersection_order},
          {"sum_order", r.sum_order},           {"direct_sum", r.direct_sum},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const LemmaIReport& r) {
  return {{"coefficients", r.coefficients},   {"classes_checked", r.classes_checked},
          {"failures", r.failures},           {"h2_order", r.h2_order},
          {"derived_h2_order", r.derived_h2_order}, {"nonzero_restrictions", r.nonzero_restrictions},
          {"passed", r.passed()}};
}

}  // namespace stablab::extensions
