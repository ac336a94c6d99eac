#include "stablab/extensions/extension.hpp"

#include <algorithm>
#include <cmath>

#include "stablab/error.hpp"

namespace stablab::extensions {

fp::GroupTable abelian_table(const fp::AbelianGroup& a) {
  const auto elems = a.elements();
  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = static_cast<Element>(a.index_of(a.add(elems[i], elems[j])));
  std::vector<Element> gens;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    AVec e = a.zero();
    e[i] = 1;
    gens.push_back(static_cast<Element>(a.index_of(e)));
  }
  return fp::GroupTable(n, std::move(mul), std::move(gens));
}

AVec CentralExtension::kernel_coords(Element l) const {
  if (kernel_index[l] < 0) throw InvalidArgument("element does not lie in the kernel");
  return kernel.element_at(kernel_index[l]);
}

CentralExtension extension_from_cocycle(const Cocycle2& c) {
  if (!homology::is_normalized(c)) throw InvalidArgument("cocycle is not normalized");
  if (!homology::is_cocycle(c)) throw InvalidArgument("table does not satisfy the cocycle identity");
  const fp::AbelianGroup& A = c.kernel;
  const std::size_t na = static_cast<std::size_t>(A.order());
  const std::size_t ng = c.order();
  const auto& G = *c.base;
  const auto elems = A.elements();
  std::vector<std::size_t> cidx(ng * ng);
  for (std::size_t i = 0; i < ng * ng; ++i) cidx[i] = static_cast<std::size_t>(A.index_of(c.values[i]));
  std::vector<std::size_t> add(na * na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) add[i * na + j] = static_cast<std::size_t>(A.index_of(A.add(elems[i], elems[j])));
  const std::size_t n = ng * na;
  std::vector<Element> mul(n * n);
  for (Element g = 0; g < ng; ++g)
    for (std::size_t a = 0; a < na; ++a)
      for (Element h = 0; h < ng; ++h)
        for (std::size_t b = 0; b < na; ++b) {
          const std::size_t s = add[add[a * na + b] * na + cidx[g * ng + h]];
          mul[(g * na + a) * n + h * na + b] = static_cast<Element>(G.mul(g, h) * na + s);
        }
  auto total = std::make_shared<const fp::GroupTable>(n, std::move(mul));
  std::vector<Element> proj(n), emb(na);
  for (std::size_t l = 0; l < n; ++l) proj[l] = static_cast<Element>(l / na);
  for (std::size_t a = 0; a < na; ++a) emb[a] = static_cast<Element>(a);
  CentralExtension e = make_extension(total, c.base, A, std::move(proj), std::move(emb));
  if (e.cocycle.values != c.values) throw InconsistentExtension("cocycle does not survive the round trip");
  return e;
}

CentralExtension make_extension(fp::GroupPtr total, fp::GroupPtr base, const fp::AbelianGroup& kernel,
                                std::vector<Element> projection, std::vector<Element> kernel_embedding) {
  const auto& L = *total;
  const auto& G = *base;
  const std::size_t nl = L.order();
  if (projection.size() != nl || !fp::is_homomorphism(L, G, projection))
    throw InconsistentExtension("projection is not a homomorphism");
  if (nl != G.order() * static_cast<std::size_t>(kernel.order()))
    throw InconsistentExtension("orders do not multiply");
  std::vector<char> hit(G.order(), 0);
  for (Element p : projection) hit[p] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InconsistentExtension("projection is not onto");
  const auto A = abelian_table(kernel);
  if (kernel_embedding.size() != A.order() || !fp::is_homomorphism(A, L, kernel_embedding))
    throw InconsistentExtension("kernel embedding is not a homomorphism");
  CentralExtension e;
  e.kernel_index.assign(nl, -1);
  for (std::size_t a = 0; a < kernel_embedding.size(); ++a) {
    const Element l = kernel_embedding[a];
    if (e.kernel_index[l] >= 0) throw InconsistentExtension("kernel embedding is not injective");
    if (projection[l] != 0) throw InconsistentExtension("kernel does not map to the identity");
    e.kernel_index[l] = static_cast<long>(a);
  }
  for (Element z : kernel_embedding)
    for (Element l = 0; l < nl; ++l)
      if (L.mul(z, l) != L.mul(l, z)) throw NotCentral("kernel is not central in the total group");
  e.total = std::move(total);
  e.base = std::move(base);
  e.kernel = kernel;
  e.projection = std::move(projection);
  e.kernel_embedding = std::move(kernel_embedding);
  e.section.assign(G.order(), 0);
  std::vector<char> set(G.order(), 0);
  for (Element l = 0; l < nl; ++l) {
    const Element g = e.projection[l];
    if (!set[g]) {
      set[g] = 1;
      e.section[g] = l;
    }
  }
  e.cocycle = cocycle_from_extension(e, e.section);
  return e;
}

CentralExtension central_quotient(fp::GroupPtr total, const std::vector<Element>& central_subgroup) {
  const auto& L = *total;
  const auto real = fp::realize_abelian(L, central_subgroup);
  auto q = fp::make_quotient(L, central_subgroup);
  std::vector<Element> emb(central_subgroup.size());
  for (Element z : real.elements) emb[static_cast<std::size_t>(real.group.index_of(real.coordinates(z)))] = z;
  auto base = std::make_shared<const fp::GroupTable>(std::move(q.table));
  return make_extension(std::move(total), std::move(base), real.group, std::move(q.projection), std::move(emb));
}

Cocycle2 cocycle_from_extension(const CentralExtension& e, const std::vector<Element>& section) {
  const auto& L = *e.total;
  const auto& G = *e.base;
  if (section.size() != G.order()) throw InvalidArgument("section has the wrong length");
  for (Element g = 0; g < G.order(); ++g)
    if (e.projection[section[g]] != g) throw InvalidArgument("section is not a right inverse of the projection");
  Cocycle2 c = Cocycle2::zero(e.base, e.kernel);
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y) {
      const Element z = L.mul(L.mul(section[x], section[y]), L.inv(section[G.mul(x, y)]));
      c.at(x, y) = e.kernel_coords(z);
    }
  return c;
}

std::vector<Element> random_section(const CentralExtension& e, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, e.kernel_embedding.size() - 1);
  std::vector<Element> s(e.section.size());
  for (std::size_t g = 0; g < s.size(); ++g) s[g] = e.total->mul(e.section[g], e.kernel_embedding[pick(rng)]);
  return s;
}

Pushforward pushforward(const CentralExtension& e, const fp::AbelianHom& beta) {
  if (!(beta.source == e.kernel)) throw InvalidArgument("pushforward map must start at the kernel");
  if (!beta.is_well_defined()) throw InvalidArgument("pushforward map is not well defined");
  Pushforward out;
  out.extension = extension_from_cocycle(homology::push(e.cocycle, beta));
  const auto& L = *e.total;
  const auto& P = out.extension;
  const std::size_t nk = static_cast<std::size_t>(beta.target.order());
  out.total_map.resize(L.order());
  for (Element l = 0; l < L.order(); ++l) {
    // l = iota(a) s(g)
    const Element g = e.projection[l];
    const AVec a = e.kernel_coords(L.mul(l, L.inv(e.section[g])));
    out.total_map[l] = static_cast<Element>(g * nk + static_cast<std::size_t>(beta.target.index_of(beta.apply(a))));
  }
  out.kernel_map = P.kernel_embedding;
  bool ok = fp::is_homomorphism(L, *P.total, out.total_map);
  for (Element l = 0; l < L.order() && ok; ++l) ok = P.projection[out.total_map[l]] == e.projection[l];
  for (std::size_t i = 0; i < e.kernel_embedding.size() && ok; ++i) {
    const AVec a = e.kernel.element_at(static_cast<long long>(i));
    ok = out.total_map[e.kernel_embedding[i]] == P.embed(beta.apply(a));
  }
  out.diagram_commutes = ok;
  return out;
}

CentralExtension pushforward_quotient(const CentralExtension& e, const fp::AbelianHom& beta) {
  const auto& L = *e.total;
  const fp::AbelianGroup& k = beta.target;
  const auto K = abelian_table(k);
  const std::size_t nk = K.order();
  const auto prod = fp::direct_product(L, K);
  std::vector<Element> graph;
  for (std::size_t i = 0; i < e.kernel_embedding.size(); ++i) {
    const AVec a = e.kernel.element_at(static_cast<long long>(i));
    graph.push_back(static_cast<Element>(e.kernel_embedding[i] * nk +
                                         static_cast<std::size_t>(k.index_of(k.neg(beta.apply(a))))));
  }
  std::sort(graph.begin(), graph.end());
  auto q = fp::make_quotient(prod, graph);
  const std::size_t nq = q.table.order();
  std::vector<Element> proj(nq, 0);
  for (Element l = 0; l < L.order(); ++l)
    for (Element b = 0; b < nk; ++b) proj[q.projection[l * nk + b]] = e.projection[l];
  std::vector<Element> emb(nk);
  for (Element b = 0; b < nk; ++b) emb[b] = q.projection[b];
  auto total = std::make_shared<const fp::GroupTable>(std::move(q.table));
  return make_extension(std::move(total), e.base, k, std::move(proj), std::move(emb));
}

Transgression::Transgression(const CentralExtension& e, const fp::AbelianGroup& k)
    : Transgression(e, std::make_shared<const homology::H2Classifier>(e.base, k)) {}

Transgression::Transgression(const CentralExtension& e, std::shared_ptr<const homology::H2Classifier> classifier)
    : c_(e.cocycle), cls_(std::move(classifier)), hom_(fp::HomGroup::of(e.kernel, cls_->coefficients())) {}

AVec Transgression::apply(const fp::AbelianHom& beta) const { return cls_->classify(homology::push(c_, beta)); }

std::vector<AVec> Transgression::matrix() const {
  std::vector<AVec> out;
  for (std::size_t i = 0; i < hom_.group.rank(); ++i) {
    AVec e = hom_.group.zero();
    e[i] = 1;
    out.push_back(apply(e));
  }
  return out;
}

bool is_coboundary(const Cocycle2& unnormalized) {
  // a section with s(1) != 1 gives c(1,1) != 0; shift by the coboundary of a
  // function supported at 1 so that c vanishes on (1,y) and (x,1)
  Cocycle2 c = unnormalized;
  {
    std::vector<AVec> f0(c.base->order(), c.kernel.zero());
    f0[0] = unnormalized(0, 0);
    c = homology::add(c, homology::negate(homology::coboundary(c.base, c.kernel, f0)));
  }
  const auto& G = *c.base;
  const fp::AbelianGroup& k = c.kernel;
  const std::size_t n = G.order();
  const double candidates = std::pow(static_cast<double>(k.order()), static_cast<double>(n - 1));
  if (candidates > kExhaustiveCoboundaryLimit) {
    const homology::H2Classifier cls(c.base, k);
    return cls.group().is_zero(cls.classify(c));
  }
  const auto elems = k.elements();
  std::vector<std::size_t> digit(n, 0);
  std::vector<AVec> f(n, k.zero());
  while (true) {
    if (homology::coboundary(c.base, k, f).values == c.values) return true;
    std::size_t i = 1;
    for (; i < n; ++i) {
      if (++digit[i] < elems.size()) {
        f[i] = elems[digit[i]];
        break;
      }
      digit[i] = 0;
      f[i] = elems[0];
    }
    if (i >= n) return false;
  }
}

bool cohomologous(const Cocycle2& a, const Cocycle2& b) { return is_coboundary(homology::add(a, homology::negate(b))); }

}  // namespace stablab::extensions
