#include "stablab/extensions/five_term.hpp"

#include <set>

#include "stablab/error.hpp"

namespace stablab::extensions {

FirstCohomology::FirstCohomology(fp::GroupPtr g, const fp::AbelianGroup& k)
    : g_(std::move(g)), k_(k), ab_(homology::abelianization_map(*g_)), hom_(fp::HomGroup::of(ab_.group, k)) {
  basis_.assign(ab_.group.rank(), 0);
  std::vector<char> found(ab_.group.rank(), 0);
  for (Element x = 0; x < g_->order(); ++x) {
    const AVec& c = ab_.coords[x];
    for (std::size_t i = 0; i < c.size(); ++i) {
      AVec e = ab_.group.zero();
      e[i] = 1;
      if (!found[i] && c == e) {
        found[i] = 1;
        basis_[i] = x;
      }
    }
  }
  for (char f : found)
    if (!f) throw InvalidArgument("abelianization basis vector has no preimage");
}

AVec FirstCohomology::coords(const std::vector<AVec>& f) const {
  if (!homology::is_homomorphism_to(*g_, k_, f)) throw InvalidArgument("1-cochain is not a homomorphism");
  fp::AbelianHom h{ab_.group, k_, {}};
  for (Element b : basis_) h.images.push_back(f[b]);
  return hom_.coords(h);
}

std::vector<AVec> FirstCohomology::table(const AVec& c) const {
  const fp::AbelianHom h = hom_.hom(c);
  std::vector<AVec> f(g_->order());
  for (Element x = 0; x < g_->order(); ++x) f[x] = h.apply(ab_.coords[x]);
  return f;
}

bool ExactnessReport::exact() const {
  for (const auto& n : nodes)
    if (!n.exact) return false;
  return !nodes.empty();
}

namespace {

NodeReport node(std::string name, const std::set<long long>& image, const std::set<long long>& kernel) {
  return {std::move(name), static_cast<long long>(image.size()), static_cast<long long>(kernel.size()), image == kernel};
}

}  // namespace

ExactnessReport five_term_check(const CentralExtension& e, const homology::CoefficientModule& km) {
  if (!km.is_finite()) throw InvalidArgument("five-term check needs finite coefficients");
  const fp::AbelianGroup& k = km.group;
  ExactnessReport r;
  r.coefficients = km.to_string();
  const FirstCohomology h1g(e.base, k), h1l(e.total, k);
  const fp::HomGroup h1a = fp::HomGroup::of(e.kernel, k);
  const Transgression tg(e, k);
  const homology::H2Classifier h2l(e.total, k);
  const auto& h2g = tg.classifier();
  r.h1_base = h1g.group().order();
  r.h1_total = h1l.group().order();
  r.h1_kernel = h1a.group.order();
  r.h2_base = h2g.group().order();
  r.h2_total = h2l.group().order();

  auto inflate1 = [&](const AVec& c) {
    const auto f = h1g.table(c);
    std::vector<AVec> g(e.total->order());
    for (Element l = 0; l < g.size(); ++l) g[l] = f[e.projection[l]];
    return h1l.coords(g);
  };
  auto restrict1 = [&](const AVec& c) {
    const auto f = h1l.table(c);
    fp::AbelianHom b{e.kernel, k, {}};
    for (std::size_t i = 0; i < e.kernel.rank(); ++i) {
      AVec v = e.kernel.zero();
      v[i] = 1;
      b.images.push_back(f[e.embed(v)]);
    }
    return h1a.coords(b);
  };
  auto inflate2 = [&](const AVec& cls) {
    return h2l.classify(homology::pull_back(h2g.representative(cls), e.total, e.projection));
  };

  std::set<long long> zero{0}, ker_inf1, im_inf1, ker_res, im_res, ker_tg, im_tg, ker_inf2;
  for (const AVec& c : h1g.group().elements()) {
    const AVec v = inflate1(c);
    im_inf1.insert(h1l.group().index_of(v));
    if (h1l.group().is_zero(v)) ker_inf1.insert(h1g.group().index_of(c));
  }
  for (const AVec& c : h1l.group().elements()) {
    const AVec v = restrict1(c);
    im_res.insert(h1a.group.index_of(v));
    if (h1a.group.is_zero(v)) ker_res.insert(h1l.group().index_of(c));
  }
  for (const AVec& b : h1a.group.elements()) {
    const AVec v = tg.apply(b);
    im_tg.insert(h2g.group().index_of(v));
    if (h2g.group().is_zero(v)) ker_tg.insert(h1a.group.index_of(b));
  }
  for (const AVec& cls : h2g.group().elements())
    if (h2l.group().is_zero(inflate2(cls))) ker_inf2.insert(h2g.group().index_of(cls));

  r.nodes.push_back(node("H1(Gamma)", zero, ker_inf1));
  r.nodes.push_back(node("H1(L)", im_inf1, ker_res));
  r.nodes.push_back(node("H1(A)", im_res, ker_tg));
  r.nodes.push_back(node("H2(Gamma)", im_tg, ker_inf2));
  return r;
}

nlohmann::json to_json(const ExactnessReport& r) {
  nlohmann::json j;
  j["coefficients"] = r.coefficients;
  j["orders"] = {{"H1(Gamma)", r.h1_base}, {"H1(L)", r.h1_total}, {"H1(A)", r.h1_kernel},
                 {"H2(Gamma)", r.h2_base}, {"H2(L)", r.h2_total}};
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : r.nodes)
    j["nodes"].push_back({{"node", n.node}, {"image_order", n.image_order}, {"kernel_order", n.kernel_order}, {"exact", n.exact}});
  j["exact"] = r.exact();
  return j;
}

}  // namespace stablab::extensions
