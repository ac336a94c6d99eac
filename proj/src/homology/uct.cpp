#include "stablab/homology/uct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stablab/error.hpp"
#include "stablab/homology/bar_complex.hpp"

namespace stablab::homology {

AbelianizationMap abelianization_map(const fp::GroupTable& g) {
  const auto q = fp::make_quotient(g, fp::commutator_subgroup(g));
  std::vector<fp::Element> all(q.table.order());
  std::iota(all.begin(), all.end(), 0);
  const auto real = fp::realize_abelian(q.table, all);
  AbelianizationMap out;
  out.group = real.group;
  out.coords.resize(g.order());
  for (fp::Element x = 0; x < g.order(); ++x) out.coords[x] = real.coordinates(q.projection[x]);
  return out;
}

namespace {

fp::Cokernel ext_norm(const fp::AbelianGroup& a, const fp::AbelianGroup& k) {
  const std::size_t na = a.rank(), nk = k.rank();
  fp::IntegerMatrix rel(na * nk, na * nk);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nk; ++j) {
      const long ai = a.invariant_factors()[i];
      // Ext(Z, -) = 0
      rel(i * nk + j, i * nk + j) = ai == 0 ? 1 : std::gcd(ai, k.invariant_factors()[j]);
    }
  return fp::Cokernel::of(rel);
}

}  // namespace

UniversalCoefficients::UniversalCoefficients(fp::GroupPtr g, const fp::AbelianGroup& k)
    : g_(std::move(g)),
      k_(k),
      ab_(abelianization_map(*g_)),
      rm_(std::make_shared<const RelationModule>(g_)),
      cls_(std::make_shared<const H2Classifier>(rm_, k)),
      hom_(fp::HomGroup::of(rm_->h2(), k)),
      ext_(ext_norm(ab_.group, k)) {}

Cocycle2 UniversalCoefficients::ext_cocycle(const AVec& e) const {
  const std::vector<long> raw = ext_.lift(e);
  const std::size_t na = ab_.group.rank(), nk = k_.rank();
  Cocycle2 c = Cocycle2::zero(g_, k_);
  const std::size_t n = g_->order();
  for (fp::Element x = 0; x < n; ++x)
    for (fp::Element y = 0; y < n; ++y) {
      AVec v = k_.zero();
      for (std::size_t i = 0; i < na; ++i) {
        const long ai = ab_.group.invariant_factors()[i];
        if (ai == 0 || ab_.coords[x][i] + ab_.coords[y][i] < ai) continue;
        for (std::size_t j = 0; j < nk; ++j) v[j] += raw[i * nk + j];
      }
      c.at(x, y) = k_.reduce(v);
    }
  return c;
}

UctSequence uct_sequence(const fp::GroupTable& g, const CoefficientModule& k) {
  UctSequence u;
  u.k = k;
  auto ptr = std::make_shared<const fp::GroupTable>(g);
  if (k.kind == CoefficientModule::Kind::Rationals) {
    // Ext(G_ab, Q) = 0 and Hom(H_2, Q) = 0 for finite G; H^2(G, Q) must vanish too.
    u.schur = RelationModule(ptr).h2();
    const bool zero = bar_rational_dimension(g, 2) == 0;
    u.ext_injective = u.hom_surjective = u.composite_zero = u.middle_exact = zero;
    return u;
  }
  const UniversalCoefficients uc(ptr, k.group);
  u.schur = uc.relation_module()->h2();
  u.ext_term = uc.ext_group();
  u.h2 = uc.h2();
  u.hom_term = uc.hom().group;
  for (std::size_t i = 0; i < u.ext_term.rank(); ++i) {
    AVec e = u.ext_term.zero();
    e[i] = 1;
    u.ext_images.push_back(uc.ext_map(e));
  }
  for (std::size_t i = 0; i < u.h2.rank(); ++i) {
    AVec e = u.h2.zero();
    e[i] = 1;
    u.hom_images.push_back(uc.hom_map(e));
  }
  // Element-by-element: maps are evaluated on each element's own cocycle.
  std::set<long long> ext_image;
  bool composite_zero = true;
  for (const AVec& e : u.ext_term.elements()) {
    const AVec cls = uc.ext_map(e);
    ext_image.insert(u.h2.index_of(cls));
    composite_zero &= u.hom_term.is_zero(uc.hom_map(cls));
  }
  u.ext_injective = static_cast<long long>(ext_image.size()) == u.ext_term.order();
  u.composite_zero = composite_zero;
  std::set<long long> hom_image, kernel;
  for (const AVec& cls : u.h2.elements()) {
    const AVec h = uc.hom_map(cls);
    hom_image.insert(u.hom_term.index_of(h));
    if (u.hom_term.is_zero(h)) kernel.insert(u.h2.index_of(cls));
  }
  u.hom_surjective = static_cast<long long>(hom_image.size()) == u.hom_term.order();
  u.middle_exact = kernel == ext_image;
  return u;
}

nlohmann::json to_json(const UctSequence& u) {
  nlohmann::json j;
  j["coefficients"] = u.k.to_string();
  j["schur_multiplier"] = u.schur.invariant_factors();
  j["ext"] = u.ext_term.invariant_factors();
  j["h2"] = u.h2.invariant_factors();
  j["hom"] = u.hom_term.invariant_factors();
  j["ext_map"] = u.ext_images;
  j["hom_map"] = u.hom_images;
  j["ext_injective"] = u.ext_injective;
  j["hom_surjective"] = u.hom_surjective;
  j["composite_zero"] = u.composite_zero;
  j["middle_exact"] = u.middle_exact;
  j["exact"] = u.exact();
  return j;
}

}  // namespace stablab::homology
