#include "stablab/fp/abelian_group.hpp"

#include <algorithm>
#include <numeric>

#include "stablab/error.hpp"

namespace stablab::fp {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long mod_long(long a, long m) {
  if (m == 0) return a;
  const long r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("invariant factor does not fit in a machine integer");
  return z.get_si();
}

std::vector<long> normalize_diagonal(const std::vector<mpz_class>& diag, std::size_t extra_free) {
  std::vector<long> finite, result;
  std::size_t free = extra_free;
  for (const auto& d : diag) {
    if (d == 0) {
      ++free;
    } else if (d != 1) {
      finite.push_back(to_long(d));
    }
  }
  result = finite;
  result.insert(result.end(), free, 0L);
  return result;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<long>& orders) {
  IntegerMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) throw InvalidArgument("cyclic order must be nonnegative");
    m(i, i) = orders[i];
  }
  const SmithForm sf = smith_normal_form(m, false);
  AbelianGroup a;
  a.factors_ = normalize_diagonal(sf.diagonal, 0);
  return a;
}

AbelianGroup AbelianGroup::cokernel(const IntegerMatrix& relations) {
  const SmithForm sf = smith_normal_form(relations, false);
  const std::size_t extra = relations.cols() > relations.rows() ? relations.cols() - relations.rows() : 0;
  AbelianGroup a;
  a.factors_ = normalize_diagonal(sf.diagonal, extra);
  return a;
}

std::vector<long> AbelianGroup::torsion_factors() const {
  std::vector<long> t;
  for (long f : factors_)
    if (f != 0) t.push_back(f);
  return t;
}

std::size_t AbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 0L));
}

long long AbelianGroup::torsion_order() const {
  long long n = 1;
  for (long f : factors_)
    if (f != 0) n *= f;
  return n;
}

long long AbelianGroup::order() const {
  if (!is_finite()) throw InvalidArgument("order of an infinite abelian group");
  return torsion_order();
}

AVec AbelianGroup::reduce(AVec v) const {
  if (v.size() != factors_.size()) throw InvalidArgument("abelian group element has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_long(v[i], factors_[i]);
  return v;
}

AVec AbelianGroup::add(const AVec& a, const AVec& b) const {
  AVec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_long(a[i] + b[i], factors_[i]);
  return r;
}

AVec AbelianGroup::neg(const AVec& a) const {
  AVec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_long(-a[i], factors_[i]);
  return r;
}

AVec AbelianGroup::scale(const AVec& a, long k) const {
  AVec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_long(a[i] * k, factors_[i]);
  return r;
}

bool AbelianGroup::is_zero(const AVec& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mod_long(a[i], factors_[i]) != 0) return false;
  return true;
}

std::vector<AVec> AbelianGroup::elements() const {
  const long long n = order();
  std::vector<AVec> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

long long AbelianGroup::index_of(const AVec& a) const {
  long long idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + mod_long(a[i], factors_[i]);
  return idx;
}

AVec AbelianGroup::element_at(long long index) const {
  AVec v(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    v[i] = static_cast<long>(index % factors_[i]);
    index /= factors_[i];
  }
  return v;
}

long AbelianGroup::element_order(const AVec& a) const {
  long o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 0) {
      if (a[i] != 0) return 0;
      continue;
    }
    const long x = mod_long(a[i], factors_[i]);
    const long oi = factors_[i] / std::gcd(x, factors_[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " + ";
    s += factors_[i] == 0 ? std::string("Z") : "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

AVec AbelianHom::apply(const AVec& v) const {
  AVec r = target.zero();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += v[i] * images[i][j];
  }
  return target.reduce(r);
}

bool AbelianHom::is_zero() const {
  for (const auto& im : images)
    if (!target.is_zero(im)) return false;
  return true;
}

bool AbelianHom::is_well_defined() const {
  if (images.size() != source.rank()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != target.rank()) return false;
    if (!target.is_zero(target.scale(images[i], source.invariant_factors()[i]))) return false;
  }
  return true;
}

AbelianHom AbelianHom::zero(const AbelianGroup& s, const AbelianGroup& t) {
  return AbelianHom{s, t, std::vector<AVec>(s.rank(), t.zero())};
}

AbelianHom compose(const AbelianHom& second, const AbelianHom& first) {
  AbelianHom h{first.source, second.target, {}};
  for (const auto& im : first.images) h.images.push_back(second.apply(im));
  return h;
}

std::vector<long long> image_indices(const AbelianHom& f) {
  std::vector<char> hit(static_cast<std::size_t>(f.target.order()), 0);
  for (const auto& v : f.source.elements()) hit[static_cast<std::size_t>(f.target.index_of(f.apply(v)))] = 1;
  std::vector<long long> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(static_cast<long long>(i));
  return out;
}

std::vector<long long> kernel_indices(const AbelianHom& f) {
  std::vector<long long> out;
  const auto elems = f.source.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (f.target.is_zero(f.apply(elems[i]))) out.push_back(static_cast<long long>(i));
  return out;
}

Cokernel Cokernel::of(const IntegerMatrix& relations) {
  Cokernel c;
  c.n = relations.cols();
  c.sf = smith_normal_form(relations, true, false);
  std::vector<long> orders;
  for (std::size_t i = 0; i < c.n; ++i) {
    const long d = i < c.sf.diagonal.size() ? to_long(c.sf.diagonal[i]) : 0;
    if (d == 1) continue;
    c.kept.push_back(i);
    orders.push_back(d);
  }
  c.group = AbelianGroup::from_cyclic_orders(orders);
  if (c.group.invariant_factors() != orders) throw InvalidArgument("cokernel factors out of order");
  return c;
}

AVec Cokernel::coords(const std::vector<long>& z) const {
  if (z.size() != n) throw InvalidArgument("cokernel vector has wrong length");
  AVec out(kept.size());
  for (std::size_t t = 0; t < kept.size(); ++t) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (z[j] != 0) s += z[j] * sf.R(j, kept[t]);
    const long f = group.invariant_factors()[t];
    if (f != 0) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(f));
      s = r;
    }
    out[t] = to_long(s);
  }
  return out;
}

std::vector<long> Cokernel::lift(const AVec& a) const {
  std::vector<mpz_class> z(n, 0);
  for (std::size_t t = 0; t < kept.size(); ++t) {
    if (a[t] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) z[j] += a[t] * sf.R_inv(kept[t], j);
  }
  std::vector<long> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = to_long(z[j]);
  return out;
}

HomGroup HomGroup::of(const AbelianGroup& a, const AbelianGroup& b) {
  if (!b.is_finite()) throw InvalidArgument("Hom target must be finite");
  HomGroup h;
  h.source = a;
  h.target = b;
  const std::size_t na = a.rank(), nb = b.rank();
  IntegerMatrix rel(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const long ai = a.invariant_factors()[i];
      const long bj = b.invariant_factors()[j];
      rel(i * nb + j, i * nb + j) = ai == 0 ? bj : std::gcd(ai, bj);
    }
  h.norm = Cokernel::of(rel);
  h.group = h.norm.group;
  return h;
}

AVec HomGroup::coords(const AbelianHom& f) const {
  const std::size_t na = source.rank(), nb = target.rank();
  std::vector<long> raw(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const long ai = source.invariant_factors()[i];
      const long bj = target.invariant_factors()[j];
      const long g = ai == 0 ? bj : std::gcd(ai, bj);
      const long step = bj / g;
      const long v = mod_long(f.images[i][j], bj);
      if (v % step != 0) throw InvalidArgument("homomorphism image has the wrong order");
      raw[i * nb + j] = v / step;
    }
  return norm.coords(raw);
}

AbelianHom HomGroup::hom(const AVec& c) const {
  const std::size_t na = source.rank(), nb = target.rank();
  const std::vector<long> raw = norm.lift(c);
  AbelianHom f{source, target, std::vector<AVec>(na, target.zero())};
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const long ai = source.invariant_factors()[i];
      const long bj = target.invariant_factors()[j];
      const long g = ai == 0 ? bj : std::gcd(ai, bj);
      f.images[i][j] = mod_long(raw[i * nb + j] * (bj / g), bj);
    }
  return f;
}

AVec AbelianRealization::coordinates(Element x) const {
  if (x >= position.size() || position[x] < 0) throw InvalidArgument("element is not in the abelian subgroup");
  return coords[static_cast<std::size_t>(position[x])];
}

Element AbelianRealization::element(const AVec& v) const {
  const AVec r = group.reduce(v);
  // Elements are few; linear search keeps this simple.
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == r) return elements[i];
  throw InvalidArgument("coordinate vector has no element");
}

AbelianRealization realize_abelian(const GroupTable& g, const std::vector<Element>& subgroup) {
  AbelianRealization out;
  out.elements = subgroup;
  std::sort(out.elements.begin(), out.elements.end());
  out.position.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.elements.size(); ++i) out.position[out.elements[i]] = static_cast<long>(i);
  for (Element a : out.elements)
    for (Element b : out.elements) {
      if (out.position[g.mul(a, b)] < 0) throw NotClosed("element set is not a subgroup");
      if (g.mul(a, b) != g.mul(b, a)) throw InvalidArgument("subgroup is not abelian");
    }
  // Greedy generators.
  std::vector<Element> gens;
  std::vector<Element> closure{0};
  for (Element x : out.elements) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = subgroup_closure(g, gens);
  }
  const std::size_t k = gens.size();
  const std::size_t n = out.elements.size();
  // Canonical exponent vectors by BFS.
  std::vector<AVec> vec(n);
  std::vector<char> seen(n, 0);
  std::vector<Element> queue{0};
  vec[static_cast<std::size_t>(out.position[0])] = AVec(k, 0);
  seen[static_cast<std::size_t>(out.position[0])] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const AVec& v = vec[static_cast<std::size_t>(out.position[queue[i]])];
    for (std::size_t j = 0; j < k; ++j) {
      const Element y = g.mul(queue[i], gens[j]);
      const auto py = static_cast<std::size_t>(out.position[y]);
      if (!seen[py]) {
        seen[py] = 1;
        vec[py] = v;
        vec[py][j] += 1;
        queue.push_back(y);
      }
    }
  }
  // Relations v_x + e_j - v_{x g_j}.
  std::vector<std::vector<long>> rels;
  for (Element x : out.elements) {
    const AVec& vx = vec[static_cast<std::size_t>(out.position[x])];
    for (std::size_t j = 0; j < k; ++j) {
      const AVec& vy = vec[static_cast<std::size_t>(out.position[g.mul(x, gens[j])])];
      std::vector<long> r(k);
      bool nonzero = false;
      for (std::size_t c = 0; c < k; ++c) {
        r[c] = vx[c] + (c == j ? 1 : 0) - vy[c];
        nonzero |= r[c] != 0;
      }
      if (nonzero) rels.push_back(r);
    }
  }
  if (k == 0) {
    out.coords.assign(n, AVec{});
    return out;
  }
  const IntegerMatrix relm = IntegerMatrix::from_rows(rels, k);
  const SmithForm sf = smith_normal_form(relm, true, false);
  // Keep the diagonal positions with d > 1.
  std::vector<std::size_t> keep;
  std::vector<long> orders;
  for (std::size_t i = 0; i < k; ++i) {
    const long d = i < sf.diagonal.size() ? sf.diagonal[i].get_si() : 0;
    if (d == 0) throw InvalidArgument("abelian subgroup realized as infinite");
    if (d != 1) {
      keep.push_back(i);
      orders.push_back(d);
    }
  }
  out.group = AbelianGroup::from_cyclic_orders(orders);
  if (out.group.invariant_factors() != orders) throw InvalidArgument("unexpected invariant factor order");
  for (std::size_t i : keep) {
    Element b = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const long e = mod_long(sf.R_inv(i, j).get_si(), static_cast<long>(g.element_order(gens[j])));
      b = g.mul(b, g.power(gens[j], e));
    }
    out.basis.push_back(b);
  }
  out.coords.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    AVec c(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < k; ++j) s += vec[idx][j] * sf.R(j, keep[t]);
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(orders[t]));
      c[t] = r.get_si();
    }
    out.coords[idx] = c;
  }
  // Consistency: the basis reproduces every element.
  for (std::size_t idx = 0; idx < n; ++idx) {
    Element x = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) x = g.mul(x, g.power(out.basis[t], out.coords[idx][t]));
    if (x != out.elements[idx]) throw InvalidArgument("abelian realization failed its consistency check");
  }
  return out;
}

AbelianGroup abelianization(const Presentation& p) {
  IntegerMatrix m(p.relators().size(), p.num_generators());
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const auto sums = p.relators()[r].exponent_sums(p.num_generators());
    for (std::size_t c = 0; c < sums.size(); ++c) m(r, c) = sums[c];
  }
  return AbelianGroup::cokernel(m);
}

AbelianGroup abelianization(const GroupTable& g) {
  const auto q = make_quotient(g, commutator_subgroup(g));
  std::vector<Element> all(q.table.order());
  std::iota(all.begin(), all.end(), 0);
  return realize_abelian(q.table, all).group;
}

AbelianGroup hom_group(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long> orders;
  for (long x : a.invariant_factors())
    for (long y : b.invariant_factors()) {
      if (x == 0) {
        orders.push_back(y);
      } else if (y != 0) {
        orders.push_back(std::gcd(x, y));
      }
    }
  return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup ext_group(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long> orders;
  for (long x : a.invariant_factors()) {
    if (x == 0) continue;
    for (long y : b.invariant_factors()) orders.push_back(y == 0 ? x : std::gcd(x, y));
  }
  return AbelianGroup::from_cyclic_orders(orders);
}

}  // namespace stablab::fp
