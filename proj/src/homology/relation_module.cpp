#include "stablab/homology/relation_module.hpp"

#include "stablab/error.hpp"

namespace stablab::homology {

using fp::Word;

RelationModule::RelationModule(fp::GroupPtr g, std::vector<Element> generators)
    : g_(std::move(g)), x_(std::move(generators)) {
  build();
}

RelationModule::RelationModule(fp::GroupPtr g) : g_(std::move(g)) {
  x_ = g_->generating_set();
  build();
}

void RelationModule::build() {
  const auto& G = *g_;
  const std::size_t n = G.order();
  const std::size_t nx = x_.size();
  t_ = G.transversal_words(x_);
  id_.assign(n * nx, -1);
  for (Element g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < nx; ++j) {
      const Element y = G.mul(g, x_[j]);
      const Word step = t_[g] * Word::generator(static_cast<std::uint32_t>(j));
      if (step == t_[y]) continue;
      id_[g * nx + j] = static_cast<long>(words_.size());
      words_.push_back(step * t_[y].inverse());
    }
  }
  const std::size_t N = words_.size();
  if (N != n * (nx == 0 ? 1 : nx) - n + 1 && !(nx == 0 && N == 0)) {
    throw InvalidArgument("unexpected number of Schreier generators");
  }
  j_.clear();
  for (const Word& w : words_) {
    const auto sums = w.exponent_sums(nx);
    j_.emplace_back(sums.begin(), sums.end());
  }
  // Coinvariant relations x s x^-1 = s.
  std::vector<std::vector<long>> rows;
  for (std::size_t s = 0; s < N; ++s) {
    for (std::size_t j = 0; j < nx; ++j) {
      const Word x = Word::generator(static_cast<std::uint32_t>(j));
      std::vector<long> row = rewrite(0, x * words_[s] * x.inverse());
      row[s] -= 1;
      bool nonzero = false;
      for (long v : row) nonzero |= v != 0;
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  m_ = fp::Cokernel::of(fp::IntegerMatrix::from_rows(rows, N));
  std::vector<long> torsion = m_.group.torsion_factors();
  h2_ = fp::AbelianGroup::from_cyclic_orders(torsion);
  if (m_.group.free_rank() != nx) throw InvalidArgument("relation module has unexpected free rank");
}

std::vector<long> RelationModule::rewrite(Element start, const Word& w) const {
  const auto& G = *g_;
  const std::size_t nx = x_.size();
  std::vector<long> v(words_.size(), 0);
  Element a = start;
  for (const fp::Letter& l : w) {
    const Element x = x_[l.generator];
    if (l.sign > 0) {
      const long id = id_[a * nx + l.generator];
      if (id >= 0) ++v[static_cast<std::size_t>(id)];
      a = G.mul(a, x);
    } else {
      const Element b = G.mul(a, G.inv(x));
      const long id = id_[b * nx + l.generator];
      if (id >= 0) --v[static_cast<std::size_t>(id)];
      a = b;
    }
  }
  return v;
}

std::vector<long> RelationModule::h2_lift(const AVec& a) const {
  AVec full(m_.group.rank(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) full[i] = a[i];
  return m_.lift(full);
}

AVec RelationModule::h2_coords(const std::vector<long>& z) const {
  const AVec full = m_.coords(z);
  for (std::size_t i = torsion_count(); i < full.size(); ++i)
    if (full[i] != 0) throw InvalidArgument("vector does not lie in the torsion of R/[F,R]");
  return AVec(full.begin(), full.begin() + static_cast<long>(torsion_count()));
}

H2Classifier::H2Classifier(fp::GroupPtr g, const fp::AbelianGroup& k)
    : H2Classifier(std::make_shared<const RelationModule>(std::move(g)), k) {}

H2Classifier::H2Classifier(std::shared_ptr<const RelationModule> rm, const fp::AbelianGroup& k)
    : rm_(std::move(rm)), k_(k) {
  const std::size_t N = rm_->num_schreier();
  const auto& J = rm_->exponent_matrix();
  std::vector<std::vector<long>> cob(rm_->generators().size(), std::vector<long>(N, 0));
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t x = 0; x < cob.size(); ++x) cob[x][s] = J[s][x];
  q_ = CocycleQuotient(rm_->module().sf, N, cob, k_);
}

std::vector<std::vector<long>> H2Classifier::phi(const Cocycle2& f) const {
  const auto& G = rm_->group();
  if (f.order() != G.order() || !(f.kernel == k_)) throw InvalidArgument("cocycle does not match the classifier");
  const auto& X = rm_->generators();
  const std::size_t n = G.order();
  const std::size_t nk = k_.rank();
  // tau along the transversal: t(g) maps to (g, tau(g)).
  std::vector<AVec> tau(n, k_.zero());
  std::vector<char> done(n, 0);
  done[0] = 1;
  std::vector<Element> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Element g = order[i];
    for (std::size_t j = 0; j < X.size(); ++j) {
      const Element y = G.mul(g, X[j]);
      if (done[y] || rm_->schreier_index(g, j) >= 0) continue;
      done[y] = 1;
      tau[y] = k_.add(tau[g], f(g, X[j]));
      order.push_back(y);
    }
  }
  std::vector<std::vector<long>> out(nk, std::vector<long>(rm_->num_schreier(), 0));
  for (Element g = 0; g < n; ++g)
    for (std::size_t j = 0; j < X.size(); ++j) {
      const long s = rm_->schreier_index(g, j);
      if (s < 0) continue;
      const AVec v = k_.add(k_.add(tau[g], f(g, X[j])), k_.neg(tau[G.mul(g, X[j])]));
      for (std::size_t c = 0; c < nk; ++c) out[c][static_cast<std::size_t>(s)] = v[c];
    }
  return out;
}

AVec H2Classifier::classify(const Cocycle2& f) const { return q_.classify(phi(f)); }

Cocycle2 H2Classifier::representative(const AVec& cls) const { return cocycle_from_phi(q_.lift(cls)); }

Cocycle2 H2Classifier::cocycle_from_phi(const std::vector<std::vector<long>>& v) const {
  const auto& G = rm_->group();
  const auto& X = rm_->generators();
  const std::size_t n = G.order();
  Cocycle2 f = Cocycle2::zero(rm_->group_ptr(), k_);
  const auto& t = rm_->transversal();
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      AVec val = k_.zero();
      Element a = g;
      for (const fp::Letter& l : t[h]) {
        const long s = rm_->schreier_index(a, l.generator);
        if (s >= 0)
          for (std::size_t c = 0; c < v.size(); ++c) val[c] += v[c][static_cast<std::size_t>(s)];
        a = G.mul(a, X[l.generator]);
      }
      f.at(g, h) = k_.reduce(val);
    }
  }
  return f;
}

bool H2Classifier::cohomologous(const Cocycle2& a, const Cocycle2& b) const { return classify(a) == classify(b); }

fp::AbelianHom H2Classifier::to_hom(const AVec& cls) const {
  const auto& h2 = rm_->h2();
  const auto& kept = rm_->module().kept;
  fp::AbelianHom out = fp::AbelianHom::zero(h2, k_);
  const auto y = q_.lift_y(cls);
  for (std::size_t c = 0; c < y.size(); ++c)
    for (std::size_t i = 0; i < h2.rank(); ++i) out.images[i][c] = y[c][kept[i]];
  return out;
}

fp::AbelianGroup schur_multiplier(const fp::Presentation& p, const fp::GroupTable& g) {
  if (g.generators().size() != p.num_generators()) throw InvalidArgument("group table does not realize the presentation");
  for (const auto& r : p.relators())
    if (g.evaluate(r) != 0) throw InvalidArgument("group table does not satisfy the presentation");
  auto ptr = std::make_shared<const fp::GroupTable>(g);
  return RelationModule(ptr, g.generators()).h2();
}

}  // namespace stablab::homology
