#include "stablab/spectral/spectral.hpp"

#include "stablab/error.hpp"
#include "stablab/extensions/five_term.hpp"
#include "stablab/fp/smith.hpp"
#include "stablab/homology/relation_module.hpp"

namespace stablab::spectral {

using fp::AVec;
using fp::Element;

namespace {

constexpr std::size_t kMaxTotalOrder = 64;

long field_char(const homology::CoefficientModule& f) {
  if (f.kind == homology::CoefficientModule::Kind::Rationals) return 0;
  if (f.kind != homology::CoefficientModule::Kind::PrimeField) throw InvalidArgument("spectral computations need a field");
  if (f.p > 7) throw InvalidArgument("prime fields are limited to p <= 7");
  return f.p;
}

void check_cap(const extensions::CentralExtension& e) {
  if (e.total->order() > kMaxTotalOrder) throw CapExceeded("spectral computations are limited to |L| <= 64");
}

long inv_mod(long a, long p) {
  for (long x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw InvalidArgument("no inverse mod p");
}

std::size_t rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && fp::mod_long(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long inv = inv_mod(fp::mod_long(rows[rank][c], p), p);
    for (long& v : rows[rank]) v = fp::mod_long(v * inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const long f = fp::mod_long(rows[r][c], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = fp::mod_long(rows[r][j] - f * rows[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_q(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  return fp::smith_normal_form(fp::IntegerMatrix::from_rows(rows, cols), false).rank();
}

// H^1 and H^2 dimensions of a finite group over F_p (0 over Q in positive degree).
std::size_t h_dim(fp::GroupPtr g, int degree, long p) {
  if (degree == 0) return 1;
  if (p == 0) return 0;
  const fp::AbelianGroup k = fp::AbelianGroup::from_cyclic_orders({p});
  if (degree == 1) return extensions::FirstCohomology(g, k).group().rank();
  return homology::H2Classifier(g, k).group().rank();
}

std::size_t h_dim_coeffs(fp::GroupPtr g, int degree, long p, std::size_t d) {
  if (d == 0) return 0;
  const fp::AbelianGroup k = fp::AbelianGroup::from_cyclic_orders(std::vector<long>(d, p));
  if (degree == 0) return d;
  if (degree == 1) return extensions::FirstCohomology(g, k).group().rank();
  return homology::H2Classifier(g, k).group().rank();
}

fp::AbelianGroup field_group(long p) { return fp::AbelianGroup::from_cyclic_orders({p}); }

}  // namespace

std::size_t LinearMap::rank() const {
  std::vector<std::vector<long>> rows(columns.begin(), columns.end());  // rank of transpose
  return p == 0 ? rank_over_q(rows, this->rows) : rank_mod_p(rows, p);
}

E2Page e2_page(const extensions::CentralExtension& e, const homology::CoefficientModule& field) {
  check_cap(e);
  const long p = field_char(field);
  E2Page page;
  page.field = field;
  auto A = std::make_shared<const fp::GroupTable>(extensions::abelian_table(e.kernel));
  for (int i = 0; i <= 2; ++i) {
    page.base_dims[i] = h_dim(e.base, i, p);
    page.kernel_dims[i] = h_dim(A, i, p);
  }
  bool ok = true;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b) {
      page.dims[a][b] = page.base_dims[a] * page.kernel_dims[b];
      if (p != 0) ok &= h_dim_coeffs(e.base, a, p, page.kernel_dims[b]) == page.dims[a][b];
    }
  page.product_formula = ok;
  page.d2_01 = d2_01(e, field);
  return page;
}

LinearMap d2_01(const extensions::CentralExtension& e, const homology::CoefficientModule& field) {
  check_cap(e);
  const long p = field_char(field);
  LinearMap m;
  m.p = p;
  if (p == 0) return m;  // H^1(A, Q) = 0 for finite A
  const fp::AbelianGroup k = field_group(p);
  const fp::HomGroup hom = fp::HomGroup::of(e.kernel, k);
  const homology::H2Classifier cls(e.base, k);
  const auto& L = *e.total;
  const auto& G = *e.base;
  m.rows = cls.group().rank();
  m.cols = hom.group.rank();
  for (std::size_t j = 0; j < m.cols; ++j) {
    AVec unit = hom.group.zero();
    unit[j] = 1;
    const fp::AbelianHom beta = hom.hom(unit);
    std::vector<AVec> f(L.order());
    for (Element l = 0; l < L.order(); ++l)
      f[l] = beta.apply(e.kernel_coords(L.mul(l, L.inv(e.section[e.projection[l]]))));
    auto df = [&](Element x, Element y) { return k.add(k.add(f[x], f[y]), k.neg(f[L.mul(x, y)])); };
    homology::Cocycle2 z = homology::Cocycle2::zero(e.base, k);
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b) z.at(a, b) = df(e.section[a], e.section[b]);
    for (Element x = 0; x < L.order(); ++x)
      for (Element y = 0; y < L.order(); ++y)
        if (df(x, y) != z(e.projection[x], e.projection[y])) throw InconsistentExtension("df is not inflated");
    m.columns.push_back(cls.group().neg(cls.classify(z)));
  }
  return m;
}

LinearMap transgression_matrix(const extensions::CentralExtension& e, const homology::CoefficientModule& field) {
  const long p = field_char(field);
  LinearMap m;
  m.p = p;
  if (p == 0) return m;
  const extensions::Transgression tg(e, field_group(p));
  m.rows = tg.h2().rank();
  m.cols = tg.hom().group.rank();
  m.columns = tg.matrix();
  return m;
}

FiltrationReport h2_filtration(const extensions::CentralExtension& e, const homology::CoefficientModule& field) {
  check_cap(e);
  const long p = field_char(field);
  FiltrationReport r;
  r.field = field;
  if (p == 0) {
    r.inflation_in_kernel = r.d2_consistent = r.within_e2 = true;
    return r;
  }
  const fp::AbelianGroup k = field_group(p);
  auto A = std::make_shared<const fp::GroupTable>(extensions::abelian_table(e.kernel));
  const homology::H2Classifier cg(e.base, k), cl(e.total, k), ca(A, k);
  r.h2_total = cl.group().rank();
  std::vector<std::vector<long>> inf_rows, res_rows;
  bool in_kernel = true;
  for (std::size_t i = 0; i < cg.group().rank(); ++i) {
    AVec unit = cg.group().zero();
    unit[i] = 1;
    const auto rep = homology::pull_back(cg.representative(unit), e.total, e.projection);
    inf_rows.push_back(cl.classify(rep));
    in_kernel &= ca.group().is_zero(ca.classify(homology::pull_back(rep, A, e.kernel_embedding)));
  }
  for (std::size_t i = 0; i < cl.group().rank(); ++i) {
    AVec unit = cl.group().zero();
    unit[i] = 1;
    res_rows.push_back(ca.classify(homology::pull_back(cl.representative(unit), A, e.kernel_embedding)));
  }
  r.inflation_image = rank_mod_p(inf_rows, p);
  r.restriction_image = rank_mod_p(res_rows, p);
  r.inflation_in_kernel = in_kernel;
  const std::size_t ker_res = r.h2_total - r.restriction_image;
  r.middle = ker_res >= r.inflation_image ? ker_res - r.inflation_image : 0;
  const LinearMap d2 = d2_01(e, field);
  r.d2_consistent = r.inflation_image + d2.rank() == cg.group().rank();
  const std::size_t h1g = h_dim(e.base, 1, p), h1a = h_dim(A, 1, p);
  r.within_e2 = r.inflation_image <= cg.group().rank() && r.middle <= h1g * h1a &&
                r.restriction_image <= ca.group().rank() && ker_res >= r.inflation_image;
  return r;
}

Symmetrization symmetrization(std::size_t n, const homology::CoefficientModule& field) {
  const long p = field_char(field);
  Symmetrization s;
  s.n = n;
  s.matrix.p = p;
  s.matrix.rows = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<long> col(n * n, 0);
      col[i * n + j] = 1;
      col[j * n + i] = p == 0 ? -1 : p - 1;
      s.matrix.columns.push_back(std::move(col));
    }
  s.matrix.cols = s.matrix.columns.size();
  s.injective = s.matrix.rank() == s.matrix.cols;
  return s;
}

nlohmann::json to_json(const LinearMap& m) {
  return {{"field_characteristic", m.p}, {"rows", m.rows}, {"cols", m.cols}, {"columns", m.columns}, {"rank", m.rank()}};
}

nlohmann::json to_json(const E2Page& page) {
  nlohmann::json dims;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b) dims["E" + std::to_string(a) + std::to_string(b)] = page.dims[a][b];
  return {{"field", page.field.to_string()}, {"dims", dims}, {"product_formula", page.product_formula},
          {"d2_01", to_json(page.d2_01)}};
}

nlohmann::json to_json(const FiltrationReport& r) {
  return {{"field", r.field.to_string()},
          {"h2_total", r.h2_total},
          {"inflation_image", r.inflation_image},
          {"middle", r.middle},
          {"restriction_image", r.restriction_image},
          {"sums", r.sums()},
          {"inflation_in_kernel", r.inflation_in_kernel},
          {"d2_consistent", r.d2_consistent},
          {"within_e2", r.within_e2},
          {"passed", r.passed()}};
}

}  // namespace stablab::spectral
