#include "stablab/homology/cochain.hpp"

#include "stablab/error.hpp"

namespace stablab::homology {

Cocycle2 Cocycle2::zero(fp::GroupPtr base, const fp::AbelianGroup& kernel) {
  Cocycle2 c;
  const std::size_t n = base->order();
  c.base = std::move(base);
  c.kernel = kernel;
  c.values.assign(n * n, kernel.zero());
  return c;
}

bool is_normalized(const Cocycle2& c) {
  for (Element g = 0; g < c.order(); ++g)
    if (!c.kernel.is_zero(c(0, g)) || !c.kernel.is_zero(c(g, 0))) return false;
  return true;
}

bool is_cocycle(const Cocycle2& c) {
  const auto& G = *c.base;
  const auto& A = c.kernel;
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y) {
      const Element xy = G.mul(x, y);
      const AVec& cxy = c(x, y);
      for (Element z = 0; z < G.order(); ++z) {
        const AVec lhs = A.add(cxy, c(xy, z));
        const AVec rhs = A.add(c(y, z), c(x, G.mul(y, z)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

Cocycle2 add(const Cocycle2& a, const Cocycle2& b) {
  if (a.base->order() != b.base->order() || !(a.kernel == b.kernel)) throw InvalidArgument("adding cochains on different groups");
  Cocycle2 r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.kernel.add(a.values[i], b.values[i]);
  return r;
}

Cocycle2 negate(const Cocycle2& a) { return scale(a, -1); }

Cocycle2 scale(const Cocycle2& a, long k) {
  Cocycle2 r = a;
  for (auto& v : r.values) v = a.kernel.scale(v, k);
  return r;
}

Cocycle2 push(const Cocycle2& c, const fp::AbelianHom& beta) {
  if (!(beta.source == c.kernel)) throw InvalidArgument("pushforward map has the wrong source");
  Cocycle2 r;
  r.base = c.base;
  r.kernel = beta.target;
  r.values.reserve(c.values.size());
  for (const auto& v : c.values) r.values.push_back(beta.apply(v));
  return r;
}

Cocycle2 coboundary(fp::GroupPtr base, const fp::AbelianGroup& kernel, const std::vector<AVec>& f) {
  Cocycle2 r = Cocycle2::zero(base, kernel);
  const auto& G = *base;
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) r.at(g, h) = kernel.add(kernel.add(f[g], f[h]), kernel.neg(f[G.mul(g, h)]));
  return r;
}

Cocycle2 pull_back(const Cocycle2& c, fp::GroupPtr source, const std::vector<Element>& map) {
  Cocycle2 r = Cocycle2::zero(source, c.kernel);
  const std::size_t n = source->order();
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) r.at(g, h) = c(map[g], map[h]);
  return r;
}

bool is_homomorphism_to(const fp::GroupTable& g, const fp::AbelianGroup& a, const std::vector<AVec>& f) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (a.add(f[x], f[y]) != a.reduce(f[g.mul(x, y)])) return false;
  return true;
}

}  // namespace stablab::homology
