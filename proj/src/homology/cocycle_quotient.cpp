#include "stablab/homology/cocycle_quotient.hpp"

#include <numeric>

#include "stablab/error.hpp"

namespace stablab::homology {

namespace {

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("transform entry does not fit in a machine integer");
  return z.get_si();
}

// (M v) mod m with M an n x n row-major matrix, reducing as we go.
std::vector<long> mat_vec_mod(const std::vector<long>& M, const std::vector<long>& v, std::size_t n, long m) {
  std::vector<long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    __int128 acc = 0;
    const long* row = M.data() + i * n;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) acc += static_cast<__int128>(fp::mod_long(row[j], m)) * v[j];
    out[i] = fp::mod_long(static_cast<long>(acc % m), m);
  }
  return out;
}

}  // namespace

CocycleQuotient::CocycleQuotient(const fp::SmithForm& sf, std::size_t n,
                                 const std::vector<std::vector<long>>& coboundaries, const fp::AbelianGroup& k)
    : n_(n) {
  if (!k.is_finite()) throw InvalidArgument("cocycle quotient needs finite coefficients");
  if (!sf.has_transforms) throw InvalidArgument("cocycle quotient needs Smith transforms");
  R_.resize(n * n);
  Rinv_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R_[i * n + j] = to_long(sf.R(i, j));
      Rinv_[i * n + j] = to_long(sf.R_inv(i, j));
    }
  std::vector<long> all_orders;
  for (long m : k.invariant_factors()) {
    Component comp;
    comp.m = m;
    comp.c.resize(n);
    comp.e.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long d = i < sf.diagonal.size() ? to_long(sf.diagonal[i]) : 0;
      comp.c[i] = d == 0 ? 1 : m / std::gcd(d, m);
      comp.e[i] = m / comp.c[i];
    }
    fp::IntegerMatrix rel(n + coboundaries.size(), n);
    for (std::size_t i = 0; i < n; ++i) rel(i, i) = comp.e[i];
    for (std::size_t b = 0; b < coboundaries.size(); ++b) {
      std::vector<long> v(n);
      for (std::size_t s = 0; s < n; ++s) v[s] = fp::mod_long(coboundaries[b][s], m);
      const std::vector<long> y = mat_vec_mod(Rinv_, v, n, m);
      for (std::size_t i = 0; i < n; ++i) {
        if (y[i] % comp.c[i] != 0) throw InvalidArgument("coboundary is not a cocycle");
        rel(n + b, i) = y[i] / comp.c[i];
      }
    }
    comp.quotient = fp::Cokernel::of(rel);
    for (long o : comp.quotient.group.invariant_factors()) all_orders.push_back(o);
    comps_.push_back(std::move(comp));
  }
  fp::IntegerMatrix diag(all_orders.size(), all_orders.size());
  for (std::size_t i = 0; i < all_orders.size(); ++i) diag(i, i) = all_orders[i];
  total_ = fp::Cokernel::of(diag);
}

AVec CocycleQuotient::classify(const std::vector<std::vector<long>>& x) const {
  if (x.size() != comps_.size()) throw InvalidArgument("cochain has the wrong number of coordinates");
  std::vector<long> concat;
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    const Component& comp = comps_[c];
    std::vector<long> v(n_);
    for (std::size_t s = 0; s < n_; ++s) v[s] = fp::mod_long(x[c][s], comp.m);
    const std::vector<long> y = mat_vec_mod(Rinv_, v, n_, comp.m);
    std::vector<long> z(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (y[i] % comp.c[i] != 0) throw InvalidArgument("cochain is not a cocycle");
      z[i] = fp::mod_long(y[i] / comp.c[i], comp.e[i]);
    }
    const AVec part = comp.quotient.coords(z);
    concat.insert(concat.end(), part.begin(), part.end());
  }
  return total_.coords(concat);
}

std::vector<std::vector<long>> CocycleQuotient::lift_y(const AVec& cls) const {
  const std::vector<long> concat = total_.lift(cls);
  std::vector<std::vector<long>> out;
  std::size_t offset = 0;
  for (const Component& comp : comps_) {
    const std::size_t len = comp.quotient.group.rank();
    const AVec part(concat.begin() + static_cast<long>(offset), concat.begin() + static_cast<long>(offset + len));
    offset += len;
    const std::vector<long> z = comp.quotient.lift(part);
    std::vector<long> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = fp::mod_long(comp.c[i] * fp::mod_long(z[i], comp.e[i]), comp.m);
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<std::vector<long>> CocycleQuotient::lift(const AVec& cls) const {
  auto ys = lift_y(cls);
  for (std::size_t c = 0; c < comps_.size(); ++c) ys[c] = mat_vec_mod(R_, ys[c], n_, comps_[c].m);
  return ys;
}

}  // namespace stablab::homology
