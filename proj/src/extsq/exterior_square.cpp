#include "stablab/extsq/exterior_square.hpp"

#include <algorithm>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/fp/tietze.hpp"
#include "stablab/homology/relation_module.hpp"

namespace stablab::extsq {

using fp::Word;

namespace {

fp::Presentation symbol_presentation(const fp::GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) names.push_back("w" + std::to_string(x) + "_" + std::to_string(y));
  auto sym = [n](Element x, Element y) { return Word::generator(static_cast<std::uint32_t>(x * n + y)); };
  std::vector<Word> rels;
  for (Element x = 0; x < n; ++x) {
    rels.push_back(sym(x, x));
    for (Element x2 = 0; x2 < n; ++x2)
      for (Element y = 0; y < n; ++y) {
        // (xx' ^ y)^-1 (xx'x^-1 ^ xyx^-1) (x ^ y)
        rels.push_back(sym(g.mul(x, x2), y).inverse() * sym(g.conjugate(x, x2), g.conjugate(x, y)) * sym(x, y));
        // (x ^ yy')^-1 (x ^ y) (yxy^-1 ^ yy'y^-1), with y' = x2
        rels.push_back(sym(x, g.mul(y, x2)).inverse() * sym(x, y) * sym(g.conjugate(y, x), g.conjugate(y, x2)));
      }
  }
  return fp::Presentation(std::move(names), std::move(rels), "exterior_square");
}

}  // namespace

ExteriorSquare exterior_square(fp::GroupPtr gp) {
  const auto& g = *gp;
  const std::size_t n = g.order();
  if (n > kExteriorSquareMaxOrder)
    throw CapExceeded("exterior square needs a group of order at most " + std::to_string(kExteriorSquareMaxOrder));
  ExteriorSquare e;
  e.source = gp;
  e.presentation = symbol_presentation(g);
  const auto simp = fp::tietze_simplify(e.presentation);
  e.simplified_generators = simp.presentation.num_generators();
  e.simplified_relators = simp.presentation.relators().size();
  e.realized = std::make_shared<const fp::GroupTable>(fp::enumerate_group(simp.presentation));
  const auto& W = *e.realized;
  for (const Word& w : simp.generator_images) e.symbol.push_back(W.evaluate(w));
  // Each surviving generator is one of the original symbols.
  std::vector<std::uint32_t> gen_symbol(simp.presentation.num_generators(), 0);
  for (std::size_t i = 0; i < simp.generator_images.size(); ++i) {
    const Word& w = simp.generator_images[i];
    if (w.size() == 1 && w[0].sign > 0) gen_symbol[w[0].generator] = static_cast<std::uint32_t>(i);
  }
  // id_bar and words by breadth-first search over the generators.
  const std::size_t nw = W.order();
  e.id_bar.assign(nw, 0);
  e.words.assign(nw, Word());
  std::vector<char> seen(nw, 0);
  seen[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element a = queue[i];
    for (std::size_t j = 0; j < W.generators().size(); ++j) {
      const Element b = W.mul(a, W.generators()[j]);
      if (seen[b]) continue;
      seen[b] = 1;
      const std::uint32_t s = gen_symbol[j];
      e.id_bar[b] = g.mul(e.id_bar[a], g.commutator(s / n, s % n));
      e.words[b] = e.words[a] * Word::generator(s);
      queue.push_back(b);
    }
  }
  if (queue.size() != nw) throw InvalidArgument("exterior square generators do not generate");
  if (!fp::is_homomorphism(W, g, e.id_bar)) throw InconsistentExtension("id_bar is not a homomorphism");
  std::vector<Element> ker;
  for (Element a = 0; a < nw; ++a)
    if (e.id_bar[a] == 0) ker.push_back(a);
  e.kernel = fp::realize_abelian(W, ker);
  const auto derived = fp::commutator_subgroup(g);
  auto sub = fp::make_subgroup(g, derived);
  e.derived = std::make_shared<const fp::GroupTable>(std::move(sub.table));
  e.derived_embedding = std::move(sub.embedding);
  return e;
}

fp::GroupTable exterior_square_table(const ExteriorSquare& e) { return *e.realized; }

bool check_relations(const ExteriorSquare& e) {
  const auto& g = *e.source;
  const auto& W = *e.realized;
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (e.symbol_of(x, x) != 0) return false;
    for (Element y = 0; y < n; ++y) {
      if (e.id_bar[e.symbol_of(x, y)] != g.commutator(x, y)) return false;
      for (Element x2 = 0; x2 < n; ++x2) {
        if (e.symbol_of(g.mul(x, x2), y) != W.mul(e.symbol_of(g.conjugate(x, x2), g.conjugate(x, y)), e.symbol_of(x, y)))
          return false;
        if (e.symbol_of(x, g.mul(y, x2)) != W.mul(e.symbol_of(x, y), e.symbol_of(g.conjugate(y, x), g.conjugate(y, x2))))
          return false;
      }
    }
  }
  return true;
}

bool id_bar_onto_derived(const ExteriorSquare& e) {
  std::vector<Element> image(e.id_bar.begin(), e.id_bar.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image == fp::commutator_subgroup(*e.source);
}

fp::AbelianGroup miller_kernel(const ExteriorSquare& e) { return e.kernel.group; }

extensions::CentralExtension miller_extension(const ExteriorSquare& e) {
  std::vector<long> index_of(e.source->order(), -1);
  for (std::size_t i = 0; i < e.derived_embedding.size(); ++i) index_of[e.derived_embedding[i]] = static_cast<long>(i);
  std::vector<Element> proj(e.realized->order());
  for (Element a = 0; a < proj.size(); ++a) proj[a] = static_cast<Element>(index_of[e.id_bar[a]]);
  std::vector<Element> emb(e.kernel.elements.size());
  for (Element z : e.kernel.elements)
    emb[static_cast<std::size_t>(e.kernel.group.index_of(e.kernel.coordinates(z)))] = z;
  return extensions::make_extension(e.realized, e.derived, e.kernel.group, std::move(proj), std::move(emb));
}

Element pi_bar(const extensions::CentralExtension& ext, const std::vector<Element>& section, Element x, Element y) {
  return ext.total->commutator(section[x], section[y]);
}

namespace {

void require_same_base(const ExteriorSquare& e, const extensions::CentralExtension& ext) {
  if (ext.base->order() != e.source->order() || ext.base->mul_table() != e.source->mul_table())
    throw InvalidArgument("extension is not over the source of the exterior square");
}

Element evaluate_pi_bar(const ExteriorSquare& e, const extensions::CentralExtension& ext, const Word& w) {
  const auto& L = *ext.total;
  const std::size_t n = e.source->order();
  Element v = 0;
  for (const fp::Letter& l : w) {
    const Element c = pi_bar(ext, l.generator / n, l.generator % n);
    v = L.mul(v, l.sign > 0 ? c : L.inv(c));
  }
  return v;
}

}  // namespace

std::vector<Element> pi_bar_map(const ExteriorSquare& e, const extensions::CentralExtension& ext) {
  require_same_base(e, ext);
  std::vector<Element> map(e.realized->order());
  for (Element a = 0; a < map.size(); ++a) map[a] = evaluate_pi_bar(e, ext, e.words[a]);
  if (!fp::is_homomorphism(*e.realized, *ext.total, map)) throw InconsistentExtension("pi_bar is not a homomorphism");
  const std::size_t n = e.source->order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map[e.symbol_of(x, y)] != pi_bar(ext, x, y)) throw InconsistentExtension("pi_bar disagrees on a symbol");
  return map;
}

fp::AbelianHom h_of_extension(const ExteriorSquare& e, const extensions::CentralExtension& ext) {
  require_same_base(e, ext);
  fp::AbelianHom h{e.kernel.group, ext.kernel, {}};
  for (Element z : e.kernel.basis) h.images.push_back(ext.kernel_coords(evaluate_pi_bar(e, ext, e.words[z])));
  return h;
}

namespace {

// Inverse of an isomorphism of finite abelian groups.
fp::AbelianHom invert(const fp::AbelianHom& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  std::vector<long long> pre(static_cast<std::size_t>(t.order()), -1);
  for (const AVec& v : s.elements()) {
    const long long i = t.index_of(f.apply(v));
    if (pre[static_cast<std::size_t>(i)] >= 0) throw InconsistentExtension("map on H_2 is not injective");
    pre[static_cast<std::size_t>(i)] = s.index_of(v);
  }
  fp::AbelianHom g{t, s, {}};
  for (std::size_t i = 0; i < t.rank(); ++i) {
    AVec e = t.zero();
    e[i] = 1;
    g.images.push_back(s.element_at(pre[static_cast<std::size_t>(t.index_of(e))]));
  }
  return g;
}

}  // namespace

extensions::CentralExtension schur_covering(const ExteriorSquare& e) {
  // F/[F,R] modulo the free part of R/[F,R]: the cocycle whose values on the
  // Schreier generators are their torsion coordinates.
  auto rm = std::make_shared<const homology::RelationModule>(e.source);
  const fp::AbelianGroup& h2 = rm->h2();
  if (h2.is_trivial()) {
    auto c = homology::Cocycle2::zero(e.source, h2);
    return extensions::extension_from_cocycle(c);
  }
  const homology::H2Classifier cls(rm, h2);
  std::vector<std::vector<long>> phi(h2.rank(), std::vector<long>(rm->num_schreier(), 0));
  for (std::size_t s = 0; s < rm->num_schreier(); ++s) {
    std::vector<long> unit(rm->num_schreier(), 0);
    unit[s] = 1;
    const AVec c = rm->module().coords(unit);
    for (std::size_t i = 0; i < h2.rank(); ++i) phi[i][s] = c[i];
  }
  const auto cover0 = extensions::extension_from_cocycle(cls.cocycle_from_phi(phi));
  const fp::AbelianHom theta = h_of_extension(e, cover0);
  auto cover = extensions::pushforward(cover0, invert(theta)).extension;
  const fp::AbelianHom h = h_of_extension(e, cover);
  for (std::size_t i = 0; i < h.images.size(); ++i) {
    AVec unit = e.kernel.group.zero();
    unit[i] = 1;
    if (h.images[i] != unit) throw InconsistentExtension("Schur covering does not induce the identity on H_2");
  }
  return cover;
}

nlohmann::json summary(const ExteriorSquare& e) {
  return {{"source_order", e.source->order()},
          {"extsq_order", e.realized->order()},
          {"kernel_invariant_factors", e.kernel.group.invariant_factors()},
          {"derived_order", e.derived->order()},
          {"symbol_generators", e.presentation.num_generators()},
          {"simplified_generators", e.simplified_generators}};
}

}  // namespace stablab::extsq
